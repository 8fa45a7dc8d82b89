#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "walktransfer/graph.hpp"
#include "walktransfer/spectral.hpp"
#include "walktransfer/witness.hpp"

namespace wt {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

// ---------------------------------------------------------------- sweeps

struct FidelityTrace {
  std::vector<double> times;
  std::vector<double> fidelities;
  double best_time = 0.0;
  double best_fidelity = 0.0;
};

/// Fidelity |<v, U(t) u>| on a uniform grid over [0, t_max]; every grid
/// local maximum above 0.5 is refined by golden-section search to 1e-10 in t.
/// Throws when the grid step is not below pi / (2 * spectral radius).
FidelityTrace sweep_max_fidelity(const SpectralDecomposition& dec, const Vector& u, const Vector& v,
                                 double t_max, int samples);

/// A sweep peak pins t only to about sqrt(eps). Tries p pi / q (q <= 64)
/// within 1e-6 of t and returns the first PST witness that holds.
std::optional<TransferWitness> snap_pst(const SpectralDecomposition& dec, const Vector& u, const Vector& v,
                                        double t, double tol = kDefaultCheckTol);

// ---------------------------------------------------------- automorphisms

/// perm[j] is the image of vertex j; its matrix sends e_j to e_perm[j].
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p, int n);
/// Weight- and potential-preserving bijection.
bool is_automorphism(const WeightedGraph& g, const Permutation& p);
Matrix permutation_matrix(const Permutation& p);
Vector apply(const Permutation& p, const Vector& x);
Permutation compose_permutations(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(int n);
/// j -> j + k (mod n).
Permutation rotation(int n, int k);
/// j -> c - j (mod n).
Permutation reflection(int n, int c);

inline constexpr int kAutomorphismOrderCap = 12;
inline constexpr std::size_t kAutomorphismCountCap = 100000;

/// Exhaustive backtracking search, identity first, lexicographic order.
/// Throws for n > 12 or when the group exceeds max_count elements.
std::vector<Permutation> find_automorphisms(const WeightedGraph& g,
                                            std::size_t max_count = kAutomorphismCountCap);

// ------------------------------------------------ automorphism arguments

enum class DerivationOutcome { NotApplicable, PairState, ZeroTarget, NormMismatch };
std::string_view to_string(DerivationOutcome outcome);

struct PairDerivation {
  int condition = 0;  // 1: P fixes a, moves b; 2: P sends a to b, b not to a
  DerivationOutcome outcome = DerivationOutcome::NotApplicable;
  Vector source;  // unit pair state
  Vector target;  // (e_c + e_d - P e_c - P e_d) / sqrt 2, not normalized
  double target_norm = 0.0;
};

/// Given plus PGST (e_a + e_b)/sqrt2 -> (e_c + e_d)/sqrt2, an automorphism
/// meeting one of the two conditions forces a pair PGST; this derives the
/// implied source and target. Throws when P is not an automorphism of g.
PairDerivation pair_from_plus_automorphism(const WeightedGraph& g, const Permutation& p, int a, int b, int c, int d);

/// An automorphism fixing b but not a rules out PGST from e_a to any plus
/// state (e_b + e_c)/sqrt2. Throws when P is not an automorphism of g.
bool vertex_to_plus_obstruction(const WeightedGraph& g, const Permutation& p, int a, int b);

// ------------------------------------------------------- phase patterns

struct PhasePattern {
  int m = 2;
  std::vector<int> support;    // indices into the decomposition
  std::vector<int> exponents;  // e_j in Z_m, one per support index
  bool defined = false;
  std::string reason;          // why the pattern is undefined
  double max_residual = 0.0;   // max_j ||E_j u - zeta^e_j E_j v||
  /// P v = u, so the exponents are eigenvalues of P on each support class.
  bool automorphism_consistent = false;
};

/// For each support class j finds e_j with E_j u = zeta_m^e_j E_j v. The
/// states are real, so only e_j in {0, m/2} can occur. Throws when P does
/// not commute with the Hamiltonian reconstructed from dec.
PhasePattern derive_phase_pattern(const SpectralDecomposition& dec, const Permutation& p, const Vector& u,
                                  const Vector& v, int m, double tol = 1e-8);

// ------------------------------------------------ integer relations

/// An eigenvalue in double precision together with an independent
/// high-precision evaluation of the same number.
struct ExactEigenvalue {
  double value = 0.0;
  std::string expression;
  std::function<BigFloat()> high_precision;
};

/// Eigenvalues of dec with high-precision evaluators: closed-form cosine sums
/// when g is circulant, otherwise Rayleigh quotient iteration carried out in
/// 100-digit arithmetic from the double-precision eigenpairs.
std::vector<ExactEigenvalue> exact_eigenvalues(const WeightedGraph& g, HamiltonianKind kind,
                                               const SpectralDecomposition& dec);

/// Connection set if g is an unweighted circulant with zero potential.
std::optional<std::set<int>> circulant_connection_set(const WeightedGraph& g);

struct NoPgstCertificate {
  int m = 2;
  std::vector<int> coefficients;
  std::vector<int> exponents;
  std::vector<double> lambdas;
  std::vector<std::string> expressions;
  double relation_value = 0.0;       // sum c_j lambda_j in double precision
  std::string relation_value_hp;     // same at 100 digits, scientific notation
  double relation_value_hp_abs = 0.0;
  long long coefficient_sum = 0;
  int phase_sum = 0;                 // sum c_j e_j mod m
};

struct RelationSearchOptions {
  int coeff_bound = 4;
  int max_l1 = 16;
  double float_tol = 1e-9;
  double certificate_tol = 1e-30;
};

inline constexpr int kMaxRelationSupport = 16;

/// Exhaustive search for integers c_j in [-B, B] with sum c_j = 0,
/// sum c_j lambda_j = 0 and sum c_j e_j != 0 (mod m). Vectors are visited by
/// increasing L1 norm, lexicographically within a norm; the first one whose
/// relation survives 100-digit re-evaluation is returned. None means only
/// that nothing exists inside the bounds.
std::optional<NoPgstCertificate> integer_relation_certificate(const std::vector<ExactEigenvalue>& support,
                                                              const std::vector<int>& exponents, int m,
                                                              const RelationSearchOptions& options = {});

/// Independent re-check of the three defining conditions.
bool verify_certificate(const NoPgstCertificate& cert, const std::vector<ExactEigenvalue>& support,
                        double certificate_tol = 1e-30);

struct NoPgstReport {
  PhasePattern pattern;
  std::vector<ExactEigenvalue> support_eigenvalues;
  std::optional<NoPgstCertificate> certificate;
};

/// Phase pattern of (u, v) under P followed by the relation search.
NoPgstReport certify_no_pgst(const WeightedGraph& g, HamiltonianKind kind, const Permutation& p,
                             const Vector& u, const Vector& v, int m, const RelationSearchOptions& options = {});

// ---------------------------------------------------------- cycle verdicts

enum class CycleQuery { Vertex, Pair, Plus };
std::string_view to_string(CycleQuery query);
CycleQuery parse_cycle_query(std::string_view name);

struct Evidence {
  std::string kind;  // pst, sweep, certificate, automorphism, fixed_state, krylov, characterization
  std::string detail;
  std::string source;
  std::string target;
  std::optional<TransferWitness> witness;
  std::optional<double> best_time;
  std::optional<double> best_fidelity;
  std::optional<double> t_max;
  std::optional<Permutation> automorphism;
  std::optional<NoPgstCertificate> certificate;
};

struct CycleVerdict {
  int n = 0;
  CycleQuery query = CycleQuery::Vertex;
  bool complement = false;
  /// For plus states: every plus state admits PGST. Otherwise: some pair of
  /// states of the queried type admits PGST.
  bool verdict = false;
  /// Some PGST of the queried type exists (differs from verdict only for
  /// plus states in the complement of C_4).
  bool exists = false;
  std::string rule;
  std::vector<Evidence> evidence;
};

inline constexpr int kVerdictEvidenceMaxN = 24;

/// Characterization verdicts for C_n and its complement; numeric evidence is
/// attached for n <= 24.
CycleVerdict cycle_pgst_verdict(int n, CycleQuery query, bool complement);

/// Largest power of two dividing n.
int two_adic_part(int n);
bool is_power_of_two(int n);
bool is_prime(int n);

}  // namespace wt
