#include "walktransfer/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace wt {

double default_group_tol(const Matrix& m) {
  if (m.size() == 0) return 1e-9;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return 1e-9 * std::max(1.0, solver.eigenvalues().cwiseAbs().maxCoeff());
}

SpectralDecomposition decompose(const Matrix& m, std::optional<double> group_tol) {
  if (m.rows() != m.cols()) throw DomainError("matrix is not square");
  if (m.rows() == 0) throw DomainError("cannot decompose an empty matrix");
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= 1e-12 * std::max(1.0, m.cwiseAbs().maxCoeff()))) {
    throw DomainError("matrix is not symmetric");
  }
  if (group_tol && !(*group_tol > 0.0)) throw DomainError("grouping tolerance must be positive");

  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) throw DomainError("symmetric eigensolver did not converge");
  const Vector& raw = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  const int n = static_cast<int>(m.rows());

  SpectralDecomposition dec;
  dec.scale = raw.cwiseAbs().maxCoeff();
  dec.group_tol = group_tol.value_or(1e-9 * std::max(1.0, dec.scale));

  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i < n && raw(i) - raw(i - 1) < dec.group_tol) continue;
    const int count = i - start;
    dec.eigenvalues.push_back(raw.segment(start, count).mean());
    Matrix basis = vecs.middleCols(start, count);
    dec.projectors.push_back(basis * basis.transpose());
    dec.bases.push_back(std::move(basis));
    start = i;
  }
  for (std::size_t j = 1; j < dec.eigenvalues.size(); ++j) {
    if (dec.eigenvalues[j] - dec.eigenvalues[j - 1] < 10.0 * dec.group_tol) dec.ill_separated = true;
  }
  return dec;
}

CMatrix transition(const SpectralDecomposition& dec, double t) {
  const int n = dec.order();
  CMatrix u = CMatrix::Zero(n, n);
  for (int j = 0; j < dec.size(); ++j) {
    u += std::polar(1.0, t * dec.eigenvalues[static_cast<std::size_t>(j)]) *
         dec.projectors[static_cast<std::size_t>(j)].cast<Complex>();
  }
  return u;
}

CVector evolve(const SpectralDecomposition& dec, const Vector& u, double t) {
  if (u.size() != dec.order()) throw DomainError("state length does not match the graph order");
  CVector out = CVector::Zero(u.size());
  for (int j = 0; j < dec.size(); ++j) {
    const Vector part = dec.projectors[static_cast<std::size_t>(j)] * u;
    out += std::polar(1.0, t * dec.eigenvalues[static_cast<std::size_t>(j)]) * part.cast<Complex>();
  }
  return out;
}

std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, const Vector& u, double tol) {
  if (u.size() != dec.order()) throw DomainError("state length does not match the graph order");
  std::vector<int> out;
  for (int j = 0; j < dec.size(); ++j) {
    if ((dec.projectors[static_cast<std::size_t>(j)] * u).norm() > tol) out.push_back(j);
  }
  return out;
}

bool is_fixed_state(const SpectralDecomposition& dec, const Vector& u, double tol) {
  return eigenvalue_support(dec, u, tol).size() == 1;
}

TransferWitness is_periodic(const SpectralDecomposition& dec, const Vector& u, double tau, double tol) {
  const CVector ut = evolve(dec, u, tau);
  const CVector uc = u.cast<Complex>();
  const Complex overlap = uc.dot(ut);
  TransferWitness w;
  w.kind = WitnessKind::Periodic;
  w.time = tau;
  w.tol = tol;
  w.alpha = overlap;
  w.gamma = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  w.residual = (ut - w.gamma * uc).norm();
  w.holds = w.residual < tol;
  return w;
}

double two_cos_rational(long long k, long long n) {
  if (n <= 0) throw DomainError("denominator must be positive");
  long long r = ((k % n) + n) % n;
  r = std::min(r, n - r);  // angle 2 pi r / n in [0, pi]
  if (4 * r == n) return 0.0;
  if (4 * r < n) return 2.0 * std::cos(2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
  return -2.0 * std::cos(kPi * static_cast<double>(n - 2 * r) / static_cast<double>(n));
}

Complex CycleSpectrum::eigvec(int l, int j) const {
  const long long k = (static_cast<long long>(l) * j) % n;
  const double re = two_cos_rational(k, n) / 2.0;
  const double im = two_cos_rational(static_cast<long long>(k) * 4 - n, 4LL * n) / 2.0;
  return {re, im};
}

CycleSpectrum cycle_exact_spectrum(int n) {
  if (n < 3) throw DomainError("cycle spectrum needs n >= 3");
  CycleSpectrum s;
  s.n = n;
  s.omega = std::polar(1.0, 2.0 * kPi / n);
  s.lambdas.reserve(static_cast<std::size_t>(n));
  s.mus.reserve(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) s.lambdas.push_back(two_cos_rational(l, n));
  s.mus.push_back(n - s.lambdas[0] - 1.0);
  for (int l = 1; l < n; ++l) s.mus.push_back(-1.0 - s.lambdas[static_cast<std::size_t>(l)]);
  return s;
}

}  // namespace wt
