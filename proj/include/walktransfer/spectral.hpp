#pragma once

#include <optional>
#include <vector>

#include "walktransfer/types.hpp"
#include "walktransfer/witness.hpp"

namespace wt {

/// Distinct eigenvalues of a real symmetric matrix with their orthogonal
/// eigenprojections, E_j = B_j B_j^T for an orthonormal basis B_j.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  std::vector<Matrix> bases;
  std::vector<Matrix> projectors;
  double scale = 0.0;  // spectral radius
  double group_tol = 0.0;
  /// Two groups sit closer than 10 * group_tol; merging may be wrong.
  bool ill_separated = false;

  int order() const { return projectors.empty() ? 0 : static_cast<int>(projectors.front().rows()); }
  int size() const { return static_cast<int>(eigenvalues.size()); }
  int multiplicity(int j) const { return static_cast<int>(bases.at(static_cast<std::size_t>(j)).cols()); }
};

inline constexpr double kDefaultSupportTol = 1e-9;

/// 1e-9 * max(1, spectral radius of m).
double default_group_tol(const Matrix& m);

/// Throws DomainError when m is not square and symmetric.
SpectralDecomposition decompose(const Matrix& m, std::optional<double> group_tol = std::nullopt);

/// U(t) = sum_j exp(i t lambda_j) E_j.
CMatrix transition(const SpectralDecomposition& dec, double t);
CVector evolve(const SpectralDecomposition& dec, const Vector& u, double t);

/// Indices j with ||E_j u|| > tol.
std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, const Vector& u,
                                    double tol = kDefaultSupportTol);
bool is_fixed_state(const SpectralDecomposition& dec, const Vector& u, double tol = kDefaultSupportTol);

/// U(tau) u = gamma u with gamma the phase of <u, U(tau) u>.
TransferWitness is_periodic(const SpectralDecomposition& dec, const Vector& u, double tau,
                            double tol = kDefaultCheckTol);

/// A(C_n) eigenvalues lambda_l = 2 cos(2 pi l / n) and the complement's mu_l,
/// indexed l = 0..n-1 with eigenvector x_l(j) = omega^(l j).
struct CycleSpectrum {
  int n = 0;
  std::vector<double> lambdas;
  std::vector<double> mus;
  Complex omega;

  Complex eigvec(int l, int j) const;
};

CycleSpectrum cycle_exact_spectrum(int n);

/// 2 cos(2 pi k / n) with the argument folded into the first quadrant, so
/// quarter and half turns come out exact.
double two_cos_rational(long long k, long long n);

}  // namespace wt
