#include "walktransfer/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "walktransfer/json_io.hpp"
#include "walktransfer/pgst.hpp"
#include "walktransfer/quotient.hpp"
#include "walktransfer/states.hpp"
#include "walktransfer/suite.hpp"
#include "walktransfer/time_expr.hpp"
#include "walktransfer/transfer.hpp"

namespace wt {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.emplace_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

int to_int(const std::string& s, std::string_view context) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw DomainError("expected an integer in '" + std::string(context) + "'");
}

std::vector<int> int_list(std::string_view s, std::string_view context) {
  std::vector<int> out;
  for (const auto& part : split(s, ',')) out.push_back(to_int(part, context));
  return out;
}

struct Common {
  std::string graph;
  std::string kind = "adjacency";
  std::string format = "json";
  double group_tol = 0.0;  // 0: default
  double tol = kDefaultCheckTol;
};

struct Options {
  Common common;
  std::string u;
  std::string v;
  std::string tau;
  std::string t;
  std::string t_max = "100";
  int samples = 10001;
  int m = 2;
  int bound = 4;
  int max_l1 = 16;
  double cert_tol = 1e-30;
  std::string perm;
  std::optional<int> rotate;
  std::optional<int> reflect;
  bool projectors = false;
  bool trace = false;
  bool hamiltonian_out = false;
  std::string partition;
  std::string check_times;
  int n = 0;
  std::string query = "vertex";
  bool complement = false;
  std::string suite = "all";
  std::uint64_t seed = kDefaultSuiteSeed;
};

void add_common(CLI::App* app, Common& c, bool graph = true, bool kind = true) {
  if (graph) app->add_option("--graph,-g", c.graph, "graph JSON file or built-in family (cycle:8, path:5, ...)")->required();
  if (kind) app->add_option("--kind,-k", c.kind, "adjacency | laplacian | signless | potential");
  app->add_option("--format", c.format, "json | csv | text");
  app->add_option("--group-tol", c.group_tol, "eigenvalue grouping tolerance (default 1e-9 * max(1, radius))");
  app->add_option("--tol", c.tol, "residual tolerance for transfer checks");
}

SpectralDecomposition decomposition(const WeightedGraph& g, const Common& c) {
  const Matrix m = hamiltonian(g, parse_hamiltonian_kind(c.kind));
  if (c.group_tol < 0.0) throw DomainError("--group-tol must be positive");
  return c.group_tol > 0.0 ? decompose(m, c.group_tol) : decompose(m);
}

void check_positive(double x, const char* name) {
  if (!(x > 0.0)) throw DomainError(std::string(name) + " must be positive");
}

Permutation chosen_permutation(const Options& o, int n) {
  const int given = (o.perm.empty() ? 0 : 1) + (o.rotate ? 1 : 0) + (o.reflect ? 1 : 0);
  if (given != 1) throw DomainError("give exactly one of --perm, --rotation, --reflection");
  if (o.rotate) return rotation(n, *o.rotate);
  if (o.reflect) return reflection(n, *o.reflect);
  Permutation p = int_list(o.perm, o.perm);
  if (!is_permutation(p, n)) throw DomainError("--perm is not a permutation of 0.." + std::to_string(n - 1));
  return p;
}

int emit(std::ostream& out, const Json& j, int code = 0) {
  out << j.dump(2) << "\n";
  return code;
}

}  // namespace

WeightedGraph load_graph(std::string_view spec) {
  const std::string s(spec);
  std::error_code ec;
  if (std::filesystem::is_regular_file(s, ec)) return read_graph_file(s);
  if (s.rfind("complement:", 0) == 0) return complement(load_graph(spec.substr(11)));
  const auto parts = split(spec, ':');
  const std::string& family = parts[0];
  if (parts.size() == 2) {
    const int n = to_int(parts[1], spec);
    if (family == "cycle") return cycle(n);
    if (family == "path") return path(n);
    if (family == "complete") return complete(n);
    if (family == "empty") return empty_graph(n);
  }
  if (parts.size() == 3 && family == "circulant") {
    const auto conn = int_list(parts[2], spec);
    return circulant(to_int(parts[1], spec), std::set<int>(conn.begin(), conn.end()));
  }
  if (parts.size() == 3 && family == "path-family") {
    return path_family(to_int(parts[2], spec), parse_path_variant(parts[1]));
  }
  throw DomainError("'" + s + "' is neither a readable file nor a built-in graph");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous-time quantum walks: state transfer checks, PGST search and certificates", "walktransfer"};
  app.require_subcommand(1);
  Options o;

  auto* graph = app.add_subcommand("graph", "normalize a graph and optionally print its Hamiltonian");
  add_common(graph, o.common);
  graph->add_flag("--hamiltonian", o.hamiltonian_out, "include the Hamiltonian matrix");

  auto* spectrum = app.add_subcommand("spectrum", "distinct eigenvalues and eigenprojections");
  add_common(spectrum, o.common);
  spectrum->add_flag("--projectors", o.projectors, "include projector matrices");

  auto* evolve_cmd = app.add_subcommand("evolve", "transition matrix U(t), or U(t) u with --u");
  add_common(evolve_cmd, o.common);
  evolve_cmd->add_option("--t", o.t, "time (decimal or pi-rational)")->required();
  evolve_cmd->add_option("--u", o.u, "state");

  CLI::App* checks[3];
  const char* check_names[3] = {"check-pst", "check-fr", "periodic"};
  const char* check_help[3] = {"perfect state transfer u -> v at tau", "fractional revival u -> v at tau",
                               "periodicity of u at tau"};
  for (int i = 0; i < 3; ++i) {
    checks[i] = app.add_subcommand(check_names[i], check_help[i]);
    add_common(checks[i], o.common);
    checks[i]->add_option("--u", o.u, "source state")->required();
    if (i < 2) checks[i]->add_option("--v", o.v, "target state")->required();
    checks[i]->add_option("--tau", o.tau, "time (decimal or pi-rational)")->required();
  }

  auto* search = app.add_subcommand("search-pgst", "fidelity sweep over [0, t_max] with peak refinement");
  add_common(search, o.common);
  search->add_option("--u", o.u, "source state")->required();
  search->add_option("--v", o.v, "target state")->required();
  search->add_option("--t-max", o.t_max, "end of the time window");
  search->add_option("--samples", o.samples, "grid points (>= 2)");
  search->add_flag("--trace", o.trace, "include every grid sample in JSON output");

  auto* certify = app.add_subcommand("certify-no-pgst", "phase pattern and integer relation ruling out PGST");
  add_common(certify, o.common);
  certify->add_option("--u", o.u, "source state")->required();
  certify->add_option("--v", o.v, "target state")->required();
  certify->add_option("--m", o.m, "order of the phase root of unity");
  certify->add_option("--bound", o.bound, "coefficient bound");
  certify->add_option("--max-l1", o.max_l1, "largest L1 norm searched");
  certify->add_option("--cert-tol", o.cert_tol, "high-precision acceptance threshold");
  certify->add_option("--perm", o.perm, "automorphism as images 'p0,p1,...'");
  certify->add_option("--rotation", o.rotate, "automorphism j -> j + k");
  certify->add_option("--reflection", o.reflect, "automorphism j -> c - j");

  auto* verdict = app.add_subcommand("cycle-verdict", "PGST verdict for C_n or its complement with evidence");
  verdict->add_option("n", o.n, "cycle order")->required();
  verdict->add_option("--query", o.query, "vertex | pair | plus");
  verdict->add_flag("--complement", o.complement, "use the complement of C_n");
  verdict->add_option("--format", o.common.format, "json");

  auto* quotient = app.add_subcommand("quotient", "equitable partition check and symmetrized quotient");
  add_common(quotient, o.common, true, false);
  quotient->add_option("--partition,-p", o.partition, "partition JSON file or inline JSON")->required();
  quotient->add_option("--check-times", o.check_times, "comma-separated times for the intertwining check");

  auto* suite = app.add_subcommand("verify-suite", "run a verification battery");
  suite->add_option("name", o.suite, "all | spectral | pst | complement | doublecover | cycles | paths");
  suite->add_option("--seed", o.seed, "seed for randomized checks");
  suite->add_option("--format", o.common.format, "json | text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    err << "walktransfer: " << msg << "\n";
    return 2;
  }

  try {
    const Common& c = o.common;
    const bool csv = c.format == "csv";
    if (c.format != "json" && c.format != "csv" && c.format != "text") throw DomainError("unknown --format " + c.format);
    check_positive(c.tol, "--tol");

    if (graph->parsed()) {
      const WeightedGraph g = load_graph(c.graph);
      Json j{{"graph", graph_to_json(g)}, {"simple", g.is_simple()}};
      if (o.hamiltonian_out) {
        j["kind"] = std::string(to_string(parse_hamiltonian_kind(c.kind)));
        j["hamiltonian"] = matrix_to_json(hamiltonian(g, parse_hamiltonian_kind(c.kind)));
      }
      return emit(out, j);
    }
    if (spectrum->parsed()) {
      const WeightedGraph g = load_graph(c.graph);
      Json j = to_json(decomposition(g, c), o.projectors);
      j["kind"] = std::string(to_string(parse_hamiltonian_kind(c.kind)));
      return emit(out, j);
    }
    if (evolve_cmd->parsed()) {
      const WeightedGraph g = load_graph(c.graph);
      const SpectralDecomposition dec = decomposition(g, c);
      const double t = parse_time(o.t);
      Json j{{"t", t}};
      if (o.u.empty()) {
        j["U"] = matrix_to_json(transition(dec, t));
      } else {
        const CVector x = evolve(dec, parse_state(o.u, g.order()), t);
        Json vec = Json::array();
        for (Eigen::Index i = 0; i < x.size(); ++i) vec.push_back(complex_to_json(x(i)));
        j["state"] = vec;
      }
      return emit(out, j);
    }
    for (int i = 0; i < 3; ++i) {
      if (!checks[i]->parsed()) continue;
      const WeightedGraph g = load_graph(c.graph);
      const SpectralDecomposition dec = decomposition(g, c);
      const PureState u = parse_state(o.u, g.order());
      const double tau = parse_time(o.tau);
      TransferWitness w;
      if (i == 0) w = check_pst(dec, u, parse_state(o.v, g.order()), tau, c.tol);
      if (i == 1) w = check_fr(dec, u, parse_state(o.v, g.order()), tau, c.tol);
      if (i == 2) w = is_periodic(dec, u, tau, c.tol);
      return emit(out, to_json(w), w.holds ? 0 : 1);
    }
    if (search->parsed()) {
      const WeightedGraph g = load_graph(c.graph);
      const SpectralDecomposition dec = decomposition(g, c);
      const FidelityTrace trace = sweep_max_fidelity(dec, parse_state(o.u, g.order()), parse_state(o.v, g.order()),
                                                     parse_time(o.t_max), o.samples);
      if (csv) {
        out << "t,fidelity\n";
        char buf[96];
        for (std::size_t k = 0; k < trace.times.size(); ++k) {
          std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", trace.times[k], trace.fidelities[k]);
          out << buf;
        }
        return 0;
      }
      return emit(out, to_json(trace, o.trace));
    }
    if (certify->parsed()) {
      const WeightedGraph g = load_graph(c.graph);
      RelationSearchOptions opts;
      opts.coeff_bound = o.bound;
      opts.max_l1 = o.max_l1;
      opts.certificate_tol = o.cert_tol;
      if (o.bound < 1 || o.max_l1 < 2) throw DomainError("--bound must be >= 1 and --max-l1 >= 2");
      check_positive(o.cert_tol, "--cert-tol");
      const NoPgstReport r =
          certify_no_pgst(g, parse_hamiltonian_kind(c.kind), chosen_permutation(o, g.order()),
                          parse_state(o.u, g.order()), parse_state(o.v, g.order()), o.m, opts);
      return emit(out, to_json(r), r.certificate ? 0 : 1);
    }
    if (verdict->parsed()) {
      return emit(out, to_json(cycle_pgst_verdict(o.n, parse_cycle_query(o.query), o.complement)));
    }
    if (quotient->parsed()) {
      const WeightedGraph g = load_graph(c.graph);
      std::error_code ec;
      Cells cells;
      if (std::filesystem::is_regular_file(o.partition, ec)) {
        cells = read_cells_file(o.partition);
      } else {
        try {
          cells = cells_from_json(Json::parse(o.partition));
        } catch (const nlohmann::json::parse_error&) {
          throw DomainError("--partition is neither a readable file nor valid JSON");
        }
      }
      const EquitabilityResult eq = verify_equitable(g, cells);
      if (!eq.partition) {
        return emit(out,
                    Json{{"equitable", false},
                         {"violating_vertex", eq.violating_vertex},
                         {"violating_cell", eq.violating_cell}},
                    1);
      }
      Json j{{"equitable", true}, {"partition", to_json(*eq.partition)},
             {"quotient", graph_to_json(quotient_graph(g, *eq.partition))}};
      if (!o.check_times.empty()) {
        std::vector<double> times;
        for (const auto& s : split(o.check_times, ',')) times.push_back(parse_time(s));
        const bool has_potential =
            std::any_of(g.potentials().begin(), g.potentials().end(), [](double p) { return p != 0.0; });
        const IntertwinerReport ir = intertwiner_check(
            g, *eq.partition, has_potential ? HamiltonianKind::AdjacencyPlusPotential : HamiltonianKind::Adjacency,
            times, c.tol);
        j["intertwiner"] = to_json(ir);
        return emit(out, j, ir.holds ? 0 : 1);
      }
      return emit(out, j);
    }
    if (suite->parsed()) {
      const SuiteReport r = verify_suite(o.suite, o.seed);
      if (c.format == "text") {
        out << format_suite_text(r);
        return r.all_pass ? 0 : 1;
      }
      const Json j = suite_to_json(r);
      return emit(out, j, r.all_pass ? 0 : 1);
    }
  } catch (const DomainError& e) {
    err << "walktransfer: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "walktransfer: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace wt
