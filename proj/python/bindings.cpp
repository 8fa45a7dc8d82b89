#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "walktransfer/json_io.hpp"
#include "walktransfer/quotient.hpp"
#include "walktransfer/states.hpp"
#include "walktransfer/suite.hpp"
#include "walktransfer/transfer.hpp"

namespace py = pybind11;
using namespace wt;

namespace {

// Structured results cross the boundary as JSON text; the package decodes them.
std::string dump(const Json& j) { return j.dump(); }

SpectralDecomposition decompose_graph(const WeightedGraph& g, const std::string& kind) {
  return decompose(hamiltonian(g, parse_hamiltonian_kind(kind)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Continuous-time quantum walks: spectra, state transfer, PGST verdicts and quotients";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<WeightedGraph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("order", &WeightedGraph::order)
      .def("set_edge", &WeightedGraph::set_edge, py::arg("i"), py::arg("j"), py::arg("weight") = 1.0)
      .def("remove_edge", &WeightedGraph::remove_edge)
      .def("set_potential", &WeightedGraph::set_potential)
      .def("has_edge", &WeightedGraph::has_edge)
      .def("weight", &WeightedGraph::weight)
      .def("potential", &WeightedGraph::potential)
      .def("edge_count", &WeightedGraph::edge_count)
      .def("to_json", [](const WeightedGraph& g) { return dump(graph_to_json(g)); })
      .def_static("from_json", [](const std::string& text) { return graph_from_json(Json::parse(text)); })
      .def(py::self == py::self)
      .def("__repr__", [](const WeightedGraph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("cycle", &cycle);
  m.def("path", &path);
  m.def("complete", &complete);
  m.def("empty_graph", &empty_graph);
  m.def("circulant", &circulant);
  m.def("complement", &complement);
  m.def("join", &join);
  m.def("disjoint_union", &disjoint_union);
  m.def("double_cover", [](const WeightedGraph& x1, const WeightedGraph& x2) {
    const DoubleCover dc = double_cover(x1, x2);
    return py::make_tuple(dc.graph, dc.edge_sets_intersect);
  });
  m.def("path_family", [](int n, const std::string& variant) { return path_family(n, parse_path_variant(variant)); });

  m.def("hamiltonian", [](const WeightedGraph& g, const std::string& kind) {
    return hamiltonian(g, parse_hamiltonian_kind(kind));
  }, py::arg("graph"), py::arg("kind") = "adjacency");

  m.def("state", [](const std::string& text, int n) -> Vector { return parse_state(text, n).vec(); });

  m.def("spectrum", [](const WeightedGraph& g, const std::string& kind, bool projectors) {
    return dump(to_json(decompose_graph(g, kind), projectors));
  }, py::arg("graph"), py::arg("kind") = "adjacency", py::arg("projectors") = false);

  m.def("transition", [](const WeightedGraph& g, const std::string& kind, double t) {
    return transition(decompose_graph(g, kind), t);
  }, py::arg("graph"), py::arg("kind"), py::arg("t"));

  m.def("check_pst", [](const WeightedGraph& g, const std::string& kind, const Vector& u, const Vector& v,
                        double tau, double tol) {
    return dump(to_json(check_pst(decompose_graph(g, kind), u, v, tau, tol)));
  }, py::arg("graph"), py::arg("kind"), py::arg("u"), py::arg("v"), py::arg("tau"), py::arg("tol") = kDefaultCheckTol);

  m.def("check_fr", [](const WeightedGraph& g, const std::string& kind, const Vector& u, const Vector& v,
                       double tau, double tol) {
    return dump(to_json(check_fr(decompose_graph(g, kind), u, v, tau, tol)));
  }, py::arg("graph"), py::arg("kind"), py::arg("u"), py::arg("v"), py::arg("tau"), py::arg("tol") = kDefaultCheckTol);

  m.def("is_periodic", [](const WeightedGraph& g, const std::string& kind, const Vector& u, double tau, double tol) {
    return dump(to_json(is_periodic(decompose_graph(g, kind), u, tau, tol)));
  }, py::arg("graph"), py::arg("kind"), py::arg("u"), py::arg("tau"), py::arg("tol") = kDefaultCheckTol);

  m.def("search_pgst", [](const WeightedGraph& g, const std::string& kind, const Vector& u, const Vector& v,
                          double t_max, int samples, bool trace) {
    py::gil_scoped_release release;
    return dump(to_json(sweep_max_fidelity(decompose_graph(g, kind), u, v, t_max, samples), trace));
  }, py::arg("graph"), py::arg("kind"), py::arg("u"), py::arg("v"), py::arg("t_max") = 100.0,
     py::arg("samples") = 20001, py::arg("trace") = false);

  m.def("certify_no_pgst", [](const WeightedGraph& g, const std::string& kind, const std::vector<int>& perm,
                              const Vector& u, const Vector& v, int m_order, int bound, int max_l1) {
    RelationSearchOptions opts;
    opts.coeff_bound = bound;
    opts.max_l1 = max_l1;
    return dump(to_json(certify_no_pgst(g, parse_hamiltonian_kind(kind), perm, u, v, m_order, opts)));
  }, py::arg("graph"), py::arg("kind"), py::arg("perm"), py::arg("u"), py::arg("v"), py::arg("m") = 2,
     py::arg("bound") = 4, py::arg("max_l1") = 16);

  m.def("automorphisms", [](const WeightedGraph& g) { return find_automorphisms(g); });

  m.def("cycle_verdict", [](int n, const std::string& query, bool complement_graph) {
    py::gil_scoped_release release;
    return dump(to_json(cycle_pgst_verdict(n, parse_cycle_query(query), complement_graph)));
  }, py::arg("n"), py::arg("query") = "vertex", py::arg("complement") = false);

  m.def("quotient", [](const WeightedGraph& g, const Cells& cells) {
    const EquitabilityResult r = verify_equitable(g, cells);
    if (!r.partition) {
      throw DomainError("partition is not equitable at vertex " + std::to_string(r.violating_vertex) + ", cell " +
                        std::to_string(r.violating_cell));
    }
    return py::make_tuple(quotient_graph(g, *r.partition), cell_matrix(*r.partition, g.order()));
  });

  m.def("intertwiner_check", [](const WeightedGraph& g, const Cells& cells, const std::string& kind,
                                const std::vector<double>& times) {
    const EquitabilityResult r = verify_equitable(g, cells);
    if (!r.partition) throw DomainError("partition is not equitable");
    return dump(to_json(intertwiner_check(g, *r.partition, parse_hamiltonian_kind(kind), times)));
  }, py::arg("graph"), py::arg("cells"), py::arg("kind") = "adjacency", py::arg("times"));

  m.def("verify_suite", [](const std::string& name, std::uint64_t seed) {
    py::gil_scoped_release release;
    return dump(suite_to_json(verify_suite(name, seed)));
  }, py::arg("name") = "all", py::arg("seed") = kDefaultSuiteSeed);
}
