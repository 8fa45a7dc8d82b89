#include "walktransfer/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace wt {

namespace {

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

int as_index(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
  return j.get<int>();
}

double as_real(const Json& j, const char* what) {
  if (!j.is_number()) throw DomainError(std::string(what) + " must be a number");
  return j.get<double>();
}

Json int_list(const std::vector<int>& xs) {
  Json out = Json::array();
  for (int x : xs) out.push_back(x);
  return out;
}

}  // namespace

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("graph JSON must be an object");
  if (!j.contains("n")) throw DomainError("graph JSON needs \"n\"");
  const int n = as_index(j.at("n"), "n");
  if (n < 1) throw DomainError("n must be positive");
  WeightedGraph g(n);
  if (j.contains("edges")) {
    const Json& edges = j.at("edges");
    if (!edges.is_array()) throw DomainError("\"edges\" must be an array");
    for (const Json& e : edges) {
      if (!e.is_array() || e.size() != 3) throw DomainError("each edge must be [i, j, w]");
      const int a = as_index(e[0], "edge endpoint");
      const int b = as_index(e[1], "edge endpoint");
      if (a >= b) throw DomainError("edge [" + std::to_string(a) + ", " + std::to_string(b) + "] needs i < j");
      if (g.has_edge(a, b)) throw DomainError("edge {" + std::to_string(a) + ", " + std::to_string(b) + "} repeated");
      g.set_edge(a, b, as_real(e[2], "edge weight"));
    }
  }
  if (j.contains("potential")) {
    const Json& p = j.at("potential");
    if (!p.is_array() || static_cast<int>(p.size()) != n) {
      throw DomainError("\"potential\" must be an array of n numbers");
    }
    for (int v = 0; v < n; ++v) {
      const double x = as_real(p[static_cast<std::size_t>(v)], "potential");
      if (!std::isfinite(x)) throw DomainError("potential must be finite");
      g.set_potential(v, x);
    }
  }
  return g;
}

Json graph_to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const auto& [e, w] : g.edges()) edges.push_back(Json::array({e.first, e.second, w}));
  Json pot = Json::array();
  for (double p : g.potentials()) pot.push_back(p);
  return Json{{"n", g.order()}, {"edges", edges}, {"potential", pot}};
}

WeightedGraph read_graph_file(const std::string& path) { return graph_from_json(parse_file(path)); }

Cells cells_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("cells") ? j.at("cells") : j;
  if (!arr.is_array()) throw DomainError("partition JSON must be an array of cells or {\"cells\": [...]}");
  Cells out;
  for (const Json& cell : arr) {
    if (!cell.is_array()) throw DomainError("each cell must be an array of vertices");
    std::vector<int> c;
    for (const Json& v : cell) c.push_back(as_index(v, "cell vertex"));
    out.push_back(std::move(c));
  }
  return out;
}

Cells read_cells_file(const std::string& path) { return cells_from_json(parse_file(path)); }

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const TransferWitness& w) {
  Json out{{"kind", std::string(to_string(w.kind))},
           {"time", w.time},
           {"holds", w.holds},
           {"residual", w.residual},
           {"tol", w.tol},
           {"alpha", complex_to_json(w.alpha)},
           {"beta", complex_to_json(w.beta)},
           {"gamma", complex_to_json(w.gamma)}};
  if (w.kind == WitnessKind::Fr) out["frame_changed"] = w.frame_changed;
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(row);
  }
  return out;
}

Json matrix_to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const SpectralDecomposition& dec, bool with_projectors) {
  Json eig = Json::array();
  for (int j = 0; j < dec.size(); ++j) {
    const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
    Json item{{"eigenvalue", dec.eigenvalues[static_cast<std::size_t>(j)]},
              {"multiplicity", static_cast<int>(std::lround(e.trace()))}};
    if (with_projectors) item["projector"] = matrix_to_json(e);
    eig.push_back(item);
  }
  return Json{{"n", dec.order()},
              {"spectral_radius", dec.scale},
              {"group_tol", dec.group_tol},
              {"ill_separated", dec.ill_separated},
              {"eigenvalues", eig}};
}

Json to_json(const FidelityTrace& trace, bool with_samples) {
  Json out{{"best_time", trace.best_time},
           {"best_fidelity", trace.best_fidelity},
           {"samples", trace.times.size()},
           {"t_max", trace.times.empty() ? 0.0 : trace.times.back()}};
  if (with_samples) {
    Json ts = Json::array();
    Json fs = Json::array();
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
      ts.push_back(trace.times[i]);
      fs.push_back(trace.fidelities[i]);
    }
    out["times"] = ts;
    out["fidelities"] = fs;
  }
  return out;
}

Json to_json(const PhasePattern& p) {
  Json out{{"m", p.m},
           {"defined", p.defined},
           {"support", int_list(p.support)},
           {"exponents", int_list(p.exponents)},
           {"max_residual", p.max_residual},
           {"automorphism_consistent", p.automorphism_consistent}};
  if (!p.defined) out["reason"] = p.reason;
  return out;
}

Json to_json(const NoPgstCertificate& c) {
  Json lambdas = Json::array();
  for (double x : c.lambdas) lambdas.push_back(x);
  Json exprs = Json::array();
  for (const auto& s : c.expressions) exprs.push_back(s);
  return Json{{"m", c.m},
              {"coefficients", int_list(c.coefficients)},
              {"exponents", int_list(c.exponents)},
              {"eigenvalues", lambdas},
              {"expressions", exprs},
              {"coefficient_sum", c.coefficient_sum},
              {"phase_sum", c.phase_sum},
              {"relation_value", c.relation_value},
              {"relation_value_hp", c.relation_value_hp},
              {"relation_value_hp_abs", c.relation_value_hp_abs}};
}

Json to_json(const NoPgstReport& r) {
  Json support = Json::array();
  for (const auto& e : r.support_eigenvalues) support.push_back(Json{{"value", e.value}, {"expression", e.expression}});
  Json out{{"pattern", to_json(r.pattern)}, {"support_eigenvalues", support}, {"found", r.certificate.has_value()}};
  out["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  return out;
}

Json to_json(const Evidence& e) {
  Json out{{"kind", e.kind}, {"detail", e.detail}};
  if (!e.source.empty()) out["source"] = e.source;
  if (!e.target.empty()) out["target"] = e.target;
  if (e.best_time) out["best_time"] = *e.best_time;
  if (e.best_fidelity) out["best_fidelity"] = *e.best_fidelity;
  if (e.t_max) out["t_max"] = *e.t_max;
  if (e.witness) out["witness"] = to_json(*e.witness);
  if (e.automorphism) out["automorphism"] = int_list(*e.automorphism);
  if (e.certificate) out["certificate"] = to_json(*e.certificate);
  return out;
}

Json to_json(const CycleVerdict& v) {
  Json items = Json::array();
  std::optional<double> pst_time;
  for (const auto& e : v.evidence) {
    items.push_back(to_json(e));
    if (!pst_time && e.witness && e.witness->holds) pst_time = e.witness->time;
  }
  Json evidence{{"pst_time", pst_time ? Json(*pst_time) : Json(nullptr)}, {"items", items}};
  return Json{{"n", v.n},
              {"query", std::string(to_string(v.query))},
              {"complement", v.complement},
              {"verdict", v.verdict ? "yes" : "no"},
              {"exists", v.exists ? "yes" : "no"},
              {"rule", v.rule},
              {"evidence", evidence}};
}

Json to_json(const KrylovReport& r) {
  Json times = Json::array();
  for (double t : r.times) times.push_back(t);
  return Json{{"condition_holds", r.condition_holds}, {"failing_power", r.failing_power},
              {"max_projection", r.max_projection},   {"identity_checked", r.identity_checked},
              {"identity_holds", r.identity_holds},    {"max_deviation", r.max_deviation},
              {"zeta", r.zeta},                        {"times", times}};
}

Json to_json(const ComplementTransportReport& r) {
  Json out{{"applicable", r.applicable}, {"reason", r.reason}, {"in_graph", to_json(r.in_graph)},
           {"angular_distance", r.angular_distance}};
  if (r.applicable) {
    out["in_complement"] = to_json(r.in_complement);
    out["phase"] = complex_to_json(r.phase);
    out["identity_deviation"] = r.identity_deviation;
  }
  out["holds"] = r.holds;
  return out;
}

Json to_json(const CoverEquivalenceReport& r) {
  return Json{{"statement", r.statement},
              {"description", r.description},
              {"cover", to_json(r.cover)},
              {"g_plus", to_json(r.g_plus)},
              {"g_minus", to_json(r.g_minus)},
              {"cover_side", r.cover_side},
              {"base_side", r.base_side},
              {"coefficient_error", r.coefficient_error},
              {"agree", r.agree}};
}

Json to_json(const BlockIdentityReport& r) {
  return Json{{"max_deviation", r.max_deviation}, {"holds", r.holds}, {"edge_sets_intersect", r.edge_sets_intersect}};
}

Json to_json(const EquitablePartition& part) {
  Json cells = Json::array();
  for (const auto& c : part.cells) cells.push_back(int_list(c));
  return Json{{"cells", cells}, {"counts", matrix_to_json(part.counts)}};
}

Json to_json(const IntertwinerReport& r) {
  Json times = Json::array();
  Json devs = Json::array();
  for (std::size_t i = 0; i < r.times.size(); ++i) {
    times.push_back(r.times[i]);
    devs.push_back(r.deviations[i]);
  }
  return Json{{"times", times}, {"deviations", devs}, {"max_deviation", r.max_deviation}, {"holds", r.holds}};
}

Json to_json(const PathSuiteRow& row) {
  Json evidence = Json::array();
  for (const auto& e : row.evidence) evidence.push_back(to_json(e));
  Json out{{"variant", std::string(to_string(row.variant))},
           {"n", row.n},
           {"cycle_order", row.cycle_order},
           {"quotient_order", row.quotient_order},
           {"transfer", row.transfer},
           {"quotient_matches", row.quotient_matches}};
  if (row.pendant_quotient_matches) out["pendant_quotient_matches"] = *row.pendant_quotient_matches;
  out["intertwiner_deviation"] = row.intertwiner_deviation;
  out["intertwiner_holds"] = row.intertwiner_holds;
  out["expected"] = row.expected ? "yes" : "no";
  out["verdict"] = row.verdict ? "yes" : "no";
  out["rule"] = row.rule;
  out["evidence"] = evidence;
  out["pass"] = row.pass;
  return out;
}

}  // namespace wt
