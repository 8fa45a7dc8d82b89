#include <algorithm>
#include <cmath>

#include "walktransfer/pgst.hpp"
#include "walktransfer/states.hpp"
#include "walktransfer/transfer.hpp"

namespace wt {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int two_adic_part(int n) {
  if (n <= 0) throw DomainError("two-adic part needs a positive integer");
  return n & -n;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string_view to_string(CycleQuery query) {
  switch (query) {
    case CycleQuery::Vertex: return "vertex";
    case CycleQuery::Pair: return "pair";
    case CycleQuery::Plus: return "plus";
  }
  return "vertex";
}

CycleQuery parse_cycle_query(std::string_view name) {
  if (name == "vertex") return CycleQuery::Vertex;
  if (name == "pair") return CycleQuery::Pair;
  if (name == "plus") return CycleQuery::Plus;
  throw DomainError("unknown query '" + std::string(name) + "' (expected vertex, pair or plus)");
}

namespace {

constexpr double kEvidenceWindow = 100.0;

std::string vertex_label(int a) { return "v:" + std::to_string(a); }
std::string two_label(const char* tag, int a, int b) {
  return std::string(tag) + ":" + std::to_string(a) + "," + std::to_string(b);
}

class EvidenceBuilder {
 public:
  EvidenceBuilder(int n, bool complement_graph)
      : n_(n), graph_(complement_graph ? complement(cycle(n)) : cycle(n)),
        dec_(decompose(hamiltonian(graph_, HamiltonianKind::Adjacency))) {}

  int sweep_samples() const {
    const double step = std::min(0.01, kPi / (4.0 * std::max(1.0, dec_.scale)));
    return static_cast<int>(std::ceil(kEvidenceWindow / step)) + 1;
  }

  Evidence pst(const Vector& u, const Vector& v, double tau, std::string src, std::string tgt,
               std::string detail) const {
    Evidence e;
    e.kind = "pst";
    e.detail = std::move(detail);
    e.source = std::move(src);
    e.target = std::move(tgt);
    e.witness = check_pst(dec_, u, v, tau);
    return e;
  }

  Evidence sweep(const Vector& u, const Vector& v, std::string src, std::string tgt, std::string detail) const {
    const FidelityTrace trace = sweep_max_fidelity(dec_, u, v, kEvidenceWindow, sweep_samples());
    Evidence e;
    e.kind = "sweep";
    e.detail = std::move(detail);
    e.source = std::move(src);
    e.target = std::move(tgt);
    e.best_time = trace.best_time;
    e.best_fidelity = trace.best_fidelity;
    e.t_max = kEvidenceWindow;
    if (trace.best_fidelity >= 1.0 - 1e-8) e.witness = snap_pst(dec_, u, v, trace.best_time);
    return e;
  }

  // Largest |<w, U(t) u>| over pair states w = (e_a - e_b)/sqrt2 other than
  // the source pair itself.
  Evidence sweep_any_pair(const Vector& u, int sa, int sb, std::string src, std::string detail) const {
    const int samples = sweep_samples();
    const double step = kEvidenceWindow / (samples - 1);
    double best = 0.0;
    double best_t = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double t = i * step;
      const CVector x = evolve(dec_, u, t);
      for (int a = 0; a < n_; ++a) {
        for (int b = a + 1; b < n_; ++b) {
          if (a == std::min(sa, sb) && b == std::max(sa, sb)) continue;
          const double f = std::abs(x(a) - x(b)) / std::sqrt(2.0);
          if (f > best) {
            best = f;
            best_t = t;
          }
        }
      }
    }
    Evidence e;
    e.kind = "sweep";
    e.detail = std::move(detail);
    e.source = std::move(src);
    e.target = "any other pair state";
    e.best_time = best_t;
    e.best_fidelity = best;
    e.t_max = kEvidenceWindow;
    return e;
  }

  std::optional<Evidence> certificate(const Permutation& p, const Vector& u, const Vector& v, int m,
                                      std::string src, std::string tgt, std::string detail) const {
    RelationSearchOptions options;
    options.max_l1 = 14;
    const NoPgstReport report = certify_no_pgst(graph_, HamiltonianKind::Adjacency, p, u, v, m, options);
    if (!report.certificate) return std::nullopt;
    Evidence e;
    e.kind = "certificate";
    e.detail = std::move(detail);
    e.source = std::move(src);
    e.target = std::move(tgt);
    e.automorphism = p;
    e.certificate = report.certificate;
    return e;
  }

  Evidence fixed_state(const Vector& u, std::string src, std::string detail) const {
    Evidence e;
    e.kind = "fixed_state";
    e.detail = std::move(detail);
    e.source = std::move(src);
    if (!is_fixed_state(dec_, u)) throw DomainError("expected a fixed state");
    return e;
  }

  const WeightedGraph& graph() const { return graph_; }

 private:
  int n_;
  WeightedGraph graph_;
  SpectralDecomposition dec_;
};

Evidence automorphism_evidence(Permutation p, std::string detail) {
  Evidence e;
  e.kind = "automorphism";
  e.detail = std::move(detail);
  e.automorphism = std::move(p);
  return e;
}

Evidence characterization_evidence(std::string detail) {
  Evidence e;
  e.kind = "characterization";
  e.detail = std::move(detail);
  return e;
}

void vertex_evidence(CycleVerdict& out, const EvidenceBuilder& eb) {
  const int n = out.n;
  if (out.verdict) {
    if (n == 4) {
      out.evidence.push_back(eb.pst(vertex_state(n, 0), vertex_state(n, 2), kPi / 2, vertex_label(0),
                                    vertex_label(2), "perfect state transfer between antipodal vertices at pi/2"));
    } else {
      out.evidence.push_back(eb.sweep(vertex_state(n, 0), vertex_state(n, n / 2), vertex_label(0),
                                      vertex_label(n / 2), "antipodal vertices; observation, not a proof"));
    }
    return;
  }
  if (n % 2 == 1) {
    out.evidence.push_back(automorphism_evidence(
        reflection(n, 0), "the reflection j -> -j fixes only vertex 0, so e_0 cannot approach any other e_b"));
    return;
  }
  out.evidence.push_back(automorphism_evidence(
      reflection(n, 0), "the reflection j -> -j fixes only 0 and n/2, leaving e_{n/2} as the only candidate target"));
  const auto cert = eb.certificate(rotation(n, n / 2), vertex_state(n, 0), vertex_state(n, n / 2), 2,
                                   vertex_label(0), vertex_label(n / 2),
                                   "half-turn phase pattern (-1)^l contradicts PGST to the antipodal vertex");
  if (cert) {
    out.evidence.push_back(*cert);
  } else {
    out.evidence.push_back(characterization_evidence("no integer relation within the search bounds"));
  }
}

void pair_evidence(CycleVerdict& out, const EvidenceBuilder& eb) {
  const int n = out.n;
  if (out.verdict) {
    const int b = n == 4 ? 1 : 2;
    out.evidence.push_back(eb.sweep(pair_state(n, 0, b), pair_state(n, n / 2, n / 2 + b), two_label("pair", 0, b),
                                    two_label("pair", n / 2, n / 2 + b), "observation, not a proof"));
  } else {
    out.evidence.push_back(eb.sweep_any_pair(pair_state(n, 0, 1), 0, 1, two_label("pair", 0, 1),
                                             "best fidelity to any other pair state; observation, not a proof"));
    if (n % 2 == 0) {
      const auto cert = eb.certificate(rotation(n, n / 2), pair_state(n, 0, 1), pair_state(n, n / 2, n / 2 + 1), 2,
                                       two_label("pair", 0, 1), two_label("pair", n / 2, n / 2 + 1),
                                       "half-turn phase pattern (-1)^l");
      if (cert) out.evidence.push_back(*cert);
    }
  }
  if (out.complement) {
    const std::vector<double> times{0.3, 1.7, kPi};
    const KrylovReport k = krylov_complement_identity(cycle(n), HamiltonianKind::Adjacency, pair_state(n, 0, 1), times);
    Evidence e;
    e.kind = "krylov";
    e.source = two_label("pair", 0, 1);
    e.detail = k.condition_holds && k.identity_holds
                   ? "1 is orthogonal to every M^k u for pair states of a regular graph, so the complement walk "
                     "is the cycle walk run backwards up to a global phase"
                   : "Krylov transport check failed";
    out.evidence.push_back(e);
  }
}

void plus_evidence(CycleVerdict& out, const EvidenceBuilder& eb) {
  const int n = out.n;
  const bool pow2 = is_power_of_two(n);
  if (out.complement && n == 4) {
    out.evidence.push_back(eb.fixed_state(plus_state(4, 0, 2), two_label("plus", 0, 2),
                                          "(e_0 + e_2)/sqrt2 is an eigenvector, so it never leaves its own state"));
    out.evidence.push_back(eb.pst(plus_state(4, 0, 1), plus_state(4, 2, 3), kPi / 2, two_label("plus", 0, 1),
                                  two_label("plus", 2, 3), "other plus states still transfer perfectly"));
    return;
  }
  if (out.verdict) {
    if (n == 4) {
      out.evidence.push_back(eb.pst(plus_state(4, 0, 2), plus_state(4, 1, 3), kPi / 4, two_label("plus", 0, 2),
                                    two_label("plus", 1, 3), "plus perfect state transfer at pi/4"));
      out.evidence.push_back(eb.sweep(plus_state(4, 0, 1), plus_state(4, 2, 3), two_label("plus", 0, 1),
                                      two_label("plus", 2, 3), "non-antipodal plus state"));
      return;
    }
    if (n == 8) {
      out.evidence.push_back(eb.pst(plus_state(8, 0, 4), plus_state(8, 2, 6), kPi / 2, two_label("plus", 0, 4),
                                    two_label("plus", 2, 6), "plus perfect state transfer at pi/2"));
    } else {
      out.evidence.push_back(eb.sweep(plus_state(n, 0, n / 2), plus_state(n, n / 4, 3 * n / 4),
                                      two_label("plus", 0, n / 2), two_label("plus", n / 4, 3 * n / 4),
                                      "antipodal plus state; observation, not a proof"));
    }
    out.evidence.push_back(eb.sweep(plus_state(n, 0, 1), plus_state(n, n / 2, n / 2 + 1), two_label("plus", 0, 1),
                                    two_label("plus", n / 2, n / 2 + 1),
                                    "non-antipodal plus state; observation, not a proof"));
    return;
  }
  if (n % 2 == 1) {
    out.evidence.push_back(automorphism_evidence(
        reflection(n, 0), "the reflection j -> -j fixes only vertex 0; plus PGST would then force pair PGST, "
                          "which circulants of odd order do not have"));
    return;
  }
  if (pow2) {
    out.evidence.push_back(characterization_evidence("plus PGST needs n = 2^k with k >= 3 in the complement"));
    return;
  }
  const auto half = eb.certificate(rotation(n, n / 2), plus_state(n, 0, 1), plus_state(n, n / 2, n / 2 + 1), 2,
                                   two_label("plus", 0, 1), two_label("plus", n / 2, n / 2 + 1),
                                   "non-antipodal source: the only candidate target is the half-turn image");
  if (half) {
    out.evidence.push_back(*half);
  } else {
    out.evidence.push_back(characterization_evidence(
        "non-antipodal source: no integer relation with zero coefficient sum within the search bounds"));
  }
  if (n % 4 == 0) {
    const auto quarter = eb.certificate(rotation(n, n / 4), plus_state(n, 0, n / 2), plus_state(n, n / 4, 3 * n / 4),
                                        4, two_label("plus", 0, n / 2), two_label("plus", n / 4, 3 * n / 4),
                                        "antipodal source: quarter-turn phase pattern i^l");
    if (quarter) {
      out.evidence.push_back(*quarter);
    } else {
      out.evidence.push_back(characterization_evidence("antipodal source: no integer relation within the search bounds"));
    }
  } else {
    out.evidence.push_back(characterization_evidence("antipodal source: plus PGST from an antipodal pair needs 4 | n"));
  }
}

}  // namespace

CycleVerdict cycle_pgst_verdict(int n, CycleQuery query, bool complement_graph) {
  if (n < 3) throw DomainError("cycle verdicts need n >= 3");
  CycleVerdict out;
  out.n = n;
  out.query = query;
  out.complement = complement_graph;
  const bool pow2 = is_power_of_two(n);
  switch (query) {
    case CycleQuery::Vertex:
      out.verdict = pow2 && n >= 4;
      out.exists = out.verdict;
      out.rule = "vertex PGST in C_n and its complement iff n = 2^k with k >= 2";
      break;
    case CycleQuery::Pair: {
      const int odd = n / two_adic_part(n);
      out.verdict = n % 2 == 0 && (odd == 1 || is_prime(odd));
      out.exists = out.verdict;
      out.rule = complement_graph ? "pair PGST in the complement of C_n iff it holds in C_n: n = 2^k or 2^k p "
                                    "(k >= 1, p an odd prime)"
                                  : "pair PGST in C_n iff n = 2^k or 2^k p (k >= 1, p an odd prime)";
      break;
    }
    case CycleQuery::Plus:
      out.exists = pow2 && n >= 4;
      out.verdict = pow2 && n >= (complement_graph ? 8 : 4);
      out.rule = complement_graph ? "every plus state of the complement of C_n admits PGST iff n = 2^k with k >= 3; "
                                    "some plus state does iff n = 2^k with k >= 2"
                                  : "every plus state of C_n admits PGST iff n = 2^k with k >= 2; otherwise none does";
      break;
  }
  if (n > kVerdictEvidenceMaxN) {
    out.evidence.push_back(characterization_evidence("numeric evidence is attached only for n <= 24"));
    return out;
  }
  const EvidenceBuilder eb(n, complement_graph);
  switch (query) {
    case CycleQuery::Vertex: vertex_evidence(out, eb); break;
    case CycleQuery::Pair: pair_evidence(out, eb); break;
    case CycleQuery::Plus: plus_evidence(out, eb); break;
  }
  return out;
}

}  // namespace wt
