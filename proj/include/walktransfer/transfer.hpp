#pragma once

#include <string>
#include <vector>

#include "walktransfer/graph.hpp"
#include "walktransfer/spectral.hpp"
#include "walktransfer/witness.hpp"

namespace wt {

/// |<v, U(t) u>|.
double fidelity(const SpectralDecomposition& dec, const Vector& u, const Vector& v, double t);

/// U(tau) u = gamma v with gamma the phase of <v, U(tau) u>. Throws when u and
/// v are linearly dependent.
TransferWitness check_pst(const SpectralDecomposition& dec, const Vector& u, const Vector& v, double tau,
                          double tol = kDefaultCheckTol);

/// U(tau) u = alpha u + beta v with beta != 0. A non-orthogonal v is first
/// orthonormalized against u and the witness is flagged frame_changed.
TransferWitness check_fr(const SpectralDecomposition& dec, const Vector& u, const Vector& v, double tau,
                         double tol = kDefaultCheckTol);

struct KrylovReport {
  bool condition_holds = false;
  int failing_power = -1;       // first k with 1^T M^k u != 0
  double max_projection = 0.0;  // max_k |1^T M^k u|
  bool identity_checked = false;
  bool identity_holds = false;
  double max_deviation = 0.0;
  double zeta = 0.0;
  std::vector<double> times;
};

/// When 1 is orthogonal to u, M u, ..., M^(n-1) u, checks
/// U_complement(t) u = exp(i t zeta) U(-t) u at each sample.
KrylovReport krylov_complement_identity(const WeightedGraph& g, HamiltonianKind kind, const Vector& u,
                                        const std::vector<double>& t_samples, double tol = kDefaultCheckTol);

struct ComplementTransportReport {
  bool applicable = false;
  std::string reason;
  TransferWitness in_graph;
  double angular_distance = 0.0;  // distance of n tau to 2 pi Z
  TransferWitness in_complement;  // FR u -> v at -tau in the complement
  Complex phase{1.0, 0.0};        // exp(-i tau zeta)
  double identity_deviation = 0.0;
  bool holds = false;
};

/// FR u -> v at tau in g, 1 an eigenvector and n tau in 2 pi Z give FR in the
/// complement at -tau with U_c(-tau) u = exp(-i tau zeta) U(tau) u.
/// Throws when 1 is not an eigenvector of the Hamiltonian.
ComplementTransportReport complement_fr_transport(const WeightedGraph& g, HamiltonianKind kind,
                                                  const Vector& u, const Vector& v, double tau,
                                                  double tol = kDefaultCheckTol);

struct BlockIdentityReport {
  double max_deviation = 0.0;
  bool holds = false;
  bool edge_sets_intersect = false;
};

/// Compares U of the double cover with 1/2 [[U+ + U-, U+ - U-], [U+ - U-, U+ + U-]].
BlockIdentityReport double_cover_block_identity(const WeightedGraph& x1, const WeightedGraph& x2,
                                                HamiltonianKind kind, double t, double tol = kDefaultCheckTol);

struct CoverEquivalenceReport {
  int statement = 0;
  std::string description;
  TransferWitness cover;     // the walk on the double cover
  TransferWitness g_plus;    // walks on G+ and G-; unused slots keep holds = false
  TransferWitness g_minus;
  bool cover_side = false;
  bool base_side = false;
  double coefficient_error = 0.0;  // mismatch of (alpha, beta) between the two sides
  bool agree = false;
};

/// Evaluates both sides of one of the five FR correspondences between the
/// double cover and G+/G-:
///  1. [u;0] -> [0;u]  iff  u periodic in G+ (phase alpha+beta) and G- (alpha-beta)
///  2. [u;0] -> [v;0]  iff  U+ u = U- u = alpha u + beta v
///  3. [u;0] -> [0;v]  iff  U+ u = alpha u + beta v and U- u = alpha u - beta v
///  4. FR u -> v in G+ iff [u;u]/sqrt2 -> [v;v]/sqrt2
///  5. FR u -> v in G- iff [u;-u]/sqrt2 -> [v;-v]/sqrt2
CoverEquivalenceReport double_cover_fr_equivalence(const WeightedGraph& x1, const WeightedGraph& x2,
                                                   HamiltonianKind kind, const Vector& u, const Vector& v,
                                                   double tau, int statement, double tol = kDefaultCheckTol);

}  // namespace wt
