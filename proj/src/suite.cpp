#include "walktransfer/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "walktransfer/pgst.hpp"
#include "walktransfer/states.hpp"
#include "walktransfer/transfer.hpp"

namespace wt {

std::uint64_t SeededRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SeededRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int SeededRng::range(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(next() % span);
}

WeightedGraph random_simple_graph(SeededRng& rng, int n, double p) {
  WeightedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) g.set_edge(i, j);
    }
  }
  return g;
}

namespace {

constexpr HamiltonianKind kKinds[] = {HamiltonianKind::Adjacency, HamiltonianKind::Laplacian,
                                      HamiltonianKind::SignlessLaplacian};

class Battery {
 public:
  Battery(SuiteReport& report, std::string name) : report_(report), name_(std::move(name)) {}

  // Passes when value < threshold.
  void below(std::string label, double value, double threshold, std::string detail = {}) {
    add(std::move(label), value < threshold, value, threshold, std::move(detail));
  }

  void add(std::string label, bool pass, double value, double threshold, std::string detail = {}) {
    report_.checks.push_back({name_, std::move(label), pass, value, threshold, std::move(detail)});
  }

 private:
  SuiteReport& report_;
  std::string name_;
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

std::string fmt(const char* pattern, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, x);
  return buf;
}

void spectral_battery(SuiteReport& report, SeededRng& rng) {
  Battery b(report, "spectral");
  double worst_algebra = 0.0;
  double worst_unitary = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedGraph g = random_simple_graph(rng, rng.range(2, 12));
    for (HamiltonianKind kind : kKinds) {
      const Matrix m = hamiltonian(g, kind);
      const SpectralDecomposition dec = decompose(m);
      const int n = g.order();
      const double scale = std::max(1.0, dec.scale);
      Matrix sum = Matrix::Zero(n, n);
      Matrix recon = Matrix::Zero(n, n);
      double err = 0.0;
      for (int j = 0; j < dec.size(); ++j) {
        const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
        sum += e;
        recon += dec.eigenvalues[static_cast<std::size_t>(j)] * e;
        err = std::max(err, max_abs(e * e - e));
        for (int k = j + 1; k < dec.size(); ++k) err = std::max(err, max_abs(e * dec.projectors[static_cast<std::size_t>(k)]));
      }
      err = std::max(err, max_abs(sum - Matrix::Identity(n, n)));
      err = std::max(err, max_abs(recon - m));
      worst_algebra = std::max(worst_algebra, err / scale);
      for (int s = 0; s < 10; ++s) {
        const CMatrix u = transition(dec, 10.0 * rng.uniform());
        worst_unitary = std::max(worst_unitary, max_abs(u * u.adjoint() - CMatrix::Identity(n, n)));
      }
    }
  }
  b.below("projector completeness, idempotence, orthogonality, reconstruction (50 random graphs, A/L/Q)",
          worst_algebra, 1e-10, "relative to max(1, |M|)");
  b.below("unitarity of U(t) at 10 random times per graph and kind", worst_unitary, 1e-9);
}

void pst_battery(SuiteReport& report) {
  Battery b(report, "pst");
  const auto run = [&](std::string label, const WeightedGraph& g, HamiltonianKind kind, const Vector& u,
                       const Vector& v, double tau) {
    const TransferWitness w = check_pst(decompose(hamiltonian(g, kind)), u, v, tau);
    b.add(std::move(label), w.holds, w.residual, w.tol);
  };
  run("P2 vertex PST at pi/2", path(2), HamiltonianKind::Adjacency, vertex_state(2, 0), vertex_state(2, 1), kPi / 2);
  run("C4 vertex PST e0 -> e2 at pi/2", cycle(4), HamiltonianKind::Adjacency, vertex_state(4, 0),
      vertex_state(4, 2), kPi / 2);
  run("C4 plus PST plus(0,2) -> plus(1,3) at pi/4", cycle(4), HamiltonianKind::Adjacency, plus_state(4, 0, 2),
      plus_state(4, 1, 3), kPi / 4);
  run("C8 plus PST plus(0,4) -> plus(2,6) at pi/2", cycle(8), HamiltonianKind::Adjacency, plus_state(8, 0, 4),
      plus_state(8, 2, 6), kPi / 2);
  run("P5 pair PST pair(0,4) -> pair(1,3) at pi/2", path(5), HamiltonianKind::Adjacency, pair_state(5, 0, 4),
      pair_state(5, 1, 3), kPi / 2);
}

void complement_battery(SuiteReport& report, SeededRng& rng) {
  Battery b(report, "complement");
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const WeightedGraph g = random_simple_graph(rng, rng.range(2, 12));
    const int n = g.order();
    for (HamiltonianKind kind : kKinds) {
      const ComplementParams p = complement_params(kind, n);
      const Matrix expect = p.delta * Matrix::Ones(n, n) + p.zeta * Matrix::Identity(n, n) - hamiltonian(g, kind);
      worst = std::max(worst, max_abs(hamiltonian(complement(g), kind) - expect));
    }
  }
  b.below("complement identity M(complement) = delta J + zeta I - M (50 random graphs, A/L/Q)", worst, 1e-12);

  WeightedGraph k4e = complete(4);
  k4e.remove_edge(0, 1);
  const TransferWitness k4w = check_pst(decompose(hamiltonian(k4e, HamiltonianKind::Laplacian)), vertex_state(4, 0),
                                        vertex_state(4, 1), kPi / 2);
  b.add("K4 minus an edge: Laplacian vertex PST between the non-adjacent pair at pi/2", k4w.holds, k4w.residual,
        k4w.tol);

  const WeightedGraph p2k = disjoint_union(path(2), empty_graph(2));
  const ComplementTransportReport tr = complement_fr_transport(p2k, HamiltonianKind::Laplacian, vertex_state(4, 0),
                                                               vertex_state(4, 1), kPi / 2);
  b.add("Laplacian PST of P2 + 2K1 carried to its complement (n tau in 2 pi Z)", tr.holds, tr.identity_deviation,
        kDefaultCheckTol);

  const WeightedGraph p3k1 = join(path(3), complete(1));
  const TransferWitness jw = check_pst(decompose(hamiltonian(p3k1, HamiltonianKind::Laplacian)), plus_state(4, 0, 1),
                                       plus_state(4, 2, 1), kPi / 2);
  b.add("P3 join K1: Laplacian plus PST plus(0,1) -> plus(2,1) at pi/2", jw.holds, jw.residual, jw.tol);

  std::vector<double> times;
  for (int k = 0; k < 20; ++k) times.push_back(10.0 * rng.uniform());
  const KrylovReport kr = krylov_complement_identity(path(5), HamiltonianKind::Adjacency, pair_state(5, 0, 4), times);
  b.add("P5 pair state: 1 orthogonal to its Krylov space; complement identity at 20 times",
        kr.condition_holds && kr.identity_holds, kr.max_deviation, kDefaultCheckTol);

  const TransferWitness cw = check_pst(decompose(hamiltonian(complement(path(5)), HamiltonianKind::Adjacency)),
                                       pair_state(5, 0, 4), pair_state(5, 1, 3), kPi / 2);
  b.add("complement of P5: pair PST pair(0,4) -> pair(1,3) at pi/2", cw.holds, cw.residual, cw.tol);
}

bool is_cycle_graph(const WeightedGraph& g) {
  if (!g.is_simple() || g.order() < 3) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).size() != 2) return false;
  }
  // 2-regular and connected
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

void doublecover_battery(SuiteReport& report, SeededRng& rng) {
  Battery b(report, "doublecover");
  double worst = 0.0;
  bool all = true;
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph x1 = random_simple_graph(rng, 5);
    const WeightedGraph x2 = random_simple_graph(rng, 5);
    for (HamiltonianKind kind : kKinds) {
      for (double t : {0.1, 1.0, kPi}) {
        const BlockIdentityReport r = double_cover_block_identity(x1, x2, kind, t);
        worst = std::max(worst, r.max_deviation);
        all = all && r.holds;
      }
    }
  }
  b.add("block transition formula on 20 random pairs (n = 5), A/L/Q, t in {0.1, 1, pi}", all && worst < 1e-8, worst,
        1e-8);

  WeightedGraph x1 = path(4);
  WeightedGraph x2(4);
  x2.set_edge(0, 3);
  const DoubleCover cover = double_cover(x1, x2);
  b.add("C4 split into P4 and the edge {0,3}: the cover is an 8-cycle",
        is_cycle_graph(cover.graph) && cover.graph.order() == 8 && !cover.edge_sets_intersect, 0.0, 0.0);

  const Vector u = vertex_state(4, 0);
  const Vector v = vertex_state(4, 2);
  const CoverEquivalenceReport s4 = double_cover_fr_equivalence(x1, x2, HamiltonianKind::Adjacency, u, v, kPi / 2, 4);
  b.add("C4 vertex PST at pi/2 lifts to plus PST (0,4) -> (2,6) on the cover", s4.agree && s4.cover_side,
        s4.cover.residual, kDefaultCheckTol);
  for (int st = 1; st <= 5; ++st) {
    const CoverEquivalenceReport r = double_cover_fr_equivalence(x1, x2, HamiltonianKind::Adjacency, u, v, kPi / 2, st);
    b.add("correspondence " + std::to_string(st) + " on the 8-cycle cover at pi/2: both sides agree", r.agree,
          r.coefficient_error, 10 * kDefaultCheckTol,
          std::string("cover ") + (r.cover_side ? "yes" : "no") + ", base " + (r.base_side ? "yes" : "no"));
  }
}

void cycles_battery(SuiteReport& report) {
  Battery b(report, "cycles");
  const auto cert = [&](std::string label, const WeightedGraph& g, const Permutation& p, const Vector& u,
                        const Vector& v, int m, bool want) {
    const NoPgstReport r = certify_no_pgst(g, HamiltonianKind::Adjacency, p, u, v, m);
    if (want) {
      const bool ok = r.certificate && verify_certificate(*r.certificate, r.support_eigenvalues);
      b.add(std::move(label), ok, r.certificate ? r.certificate->relation_value_hp_abs : 1.0, 1e-30);
    } else {
      b.add(std::move(label), !r.certificate, r.certificate ? 1.0 : 0.0, 0.5, "no relation inside bound 4");
    }
  };
  cert("C12 plus(0,1) -> plus(6,7): half-turn certificate", cycle(12), rotation(12, 6), plus_state(12, 0, 1),
       plus_state(12, 6, 7), 2, true);
  cert("C20 plus(0,1) -> plus(10,11): half-turn certificate", cycle(20), rotation(20, 10), plus_state(20, 0, 1),
       plus_state(20, 10, 11), 2, true);
  cert("complement C12 plus(0,6) -> plus(3,9): quarter-turn certificate", complement(cycle(12)), rotation(12, 3),
       plus_state(12, 0, 6), plus_state(12, 3, 9), 4, true);
  for (int n : {4, 8, 16}) {
    cert("C" + std::to_string(n) + " plus(0,1) -> plus(" + std::to_string(n / 2) + "," + std::to_string(n / 2 + 1) +
             "): no certificate",
         cycle(n), rotation(n, n / 2), plus_state(n, 0, 1), plus_state(n, n / 2, n / 2 + 1), 2, false);
  }

  for (bool co : {false, true}) {
    for (CycleQuery q : {CycleQuery::Vertex, CycleQuery::Pair, CycleQuery::Plus}) {
      int yes = 0;
      bool ok = true;
      for (int n = 3; n <= 24; ++n) {
        const CycleVerdict v = cycle_pgst_verdict(n, q, co);
        yes += v.verdict ? 1 : 0;
        ok = ok && !v.evidence.empty();
        for (const auto& e : v.evidence) {
          if (e.kind == "pst") ok = ok && e.witness && e.witness->holds;
          if (e.kind == "certificate") ok = ok && e.certificate && e.certificate->relation_value_hp_abs < 1e-30;
        }
      }
      b.add(std::string(co ? "complement of C_n" : "C_n") + ", " + std::string(to_string(q)) +
                " verdicts for n = 3..24 carry consistent evidence",
            ok, yes, 0.0, std::to_string(yes) + " yes verdicts");
    }
  }
}

void paths_battery(SuiteReport& report, SeededRng& rng) {
  Battery b(report, "paths");
  const Cells cells{{0}, {1, 7}, {2, 6}, {3, 5}, {4}};
  const EquitabilityResult eq = verify_equitable(cycle(8), cells);
  if (!eq.partition) {
    b.add("C8 five-cell partition is equitable", false, 0.0, 0.0);
    return;
  }
  const WeightedGraph q = quotient_graph(cycle(8), *eq.partition);
  const double r2 = std::sqrt(2.0);
  const double dev = std::max(std::abs(q.weight(0, 1) - r2), std::abs(q.weight(3, 4) - r2));
  b.add("C8 five-cell quotient is the path with end weights sqrt2", dev <= 1e-15 && q.weight(1, 2) == 1.0 &&
        q.weight(2, 3) == 1.0 && q.edge_count() == 4, dev, 1e-15);
  std::vector<double> times;
  for (int k = 0; k < 20; ++k) times.push_back(10.0 * rng.uniform());
  const IntertwinerReport ir = intertwiner_check(cycle(8), *eq.partition, HamiltonianKind::Adjacency, times);
  b.add("intertwining U(t) S^T = S^T U_quotient(t) at 20 random times", ir.holds, ir.max_deviation, 1e-8);

  report.path_rows = weighted_path_pgst_suite();
  for (const auto& row : report.path_rows) {
    b.add(std::string(to_string(row.variant)) + " n=" + std::to_string(row.n) + " via C" +
              std::to_string(row.cycle_order) + ": " + (row.verdict ? "yes" : "no"),
          row.pass, row.intertwiner_deviation, 1e-8, row.transfer);
  }
}

}  // namespace

SuiteReport verify_suite(std::string_view name, std::uint64_t seed) {
  static const std::vector<std::string> kNames{"spectral", "pst", "complement", "doublecover", "cycles", "paths"};
  const bool all = name == "all";
  if (!all && std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
    throw DomainError("unknown suite '" + std::string(name) +
                      "' (expected all, spectral, pst, complement, doublecover, cycles or paths)");
  }
  SuiteReport report;
  report.name = std::string(name);
  report.seed = seed;
  // Each battery draws from its own stream so subsets reproduce the same numbers.
  const auto want = [&](std::string_view s) { return all || name == s; };
  if (want("spectral")) {
    SeededRng rng(seed);
    spectral_battery(report, rng);
  }
  if (want("pst")) pst_battery(report);
  if (want("complement")) {
    SeededRng rng(seed + 1);
    complement_battery(report, rng);
  }
  if (want("doublecover")) {
    SeededRng rng(seed + 2);
    doublecover_battery(report, rng);
  }
  if (want("cycles")) cycles_battery(report);
  if (want("paths")) {
    SeededRng rng(seed + 3);
    paths_battery(report, rng);
  }
  report.all_pass = std::all_of(report.checks.begin(), report.checks.end(), [](const SuiteCheck& c) { return c.pass; });
  return report;
}

Json suite_to_json(const SuiteReport& report) {
  Json checks = Json::array();
  for (const auto& ch : report.checks) {
    Json item{{"battery", ch.battery}, {"check", ch.label}, {"pass", ch.pass}, {"value", ch.value},
              {"threshold", ch.threshold}};
    if (!ch.detail.empty()) item["detail"] = ch.detail;
    checks.push_back(item);
  }
  Json j{{"suite", report.name}, {"seed", report.seed}, {"all_pass", report.all_pass}, {"checks", checks}};
  if (!report.path_rows.empty()) {
    Json rows = Json::array();
    for (const auto& row : report.path_rows) rows.push_back(to_json(row));
    j["path_table"] = rows;
  }
  return j;
}

std::string format_suite_text(const SuiteReport& report) {
  std::size_t battery_w = 7;
  std::size_t label_w = 5;
  for (const auto& c : report.checks) {
    battery_w = std::max(battery_w, c.battery.size());
    label_w = std::max(label_w, c.label.size());
  }
  std::ostringstream out;
  const auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
  out << "result  " << pad("battery", battery_w) << "  " << pad("check", label_w) << "  value\n";
  int passed = 0;
  for (const auto& c : report.checks) {
    passed += c.pass ? 1 : 0;
    out << (c.pass ? "PASS    " : "FAIL    ") << pad(c.battery, battery_w) << "  " << pad(c.label, label_w) << "  "
        << fmt("%.3e", c.value) << "\n";
  }
  out << passed << "/" << report.checks.size() << " checks passed (suite " << report.name << ", seed " << report.seed
      << ")\n";
  return out.str();
}

}  // namespace wt
