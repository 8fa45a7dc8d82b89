#include "walktransfer/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wt {

namespace {

std::pair<int, int> key(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

void require_simple(const WeightedGraph& g, const char* what) {
  if (!g.is_simple()) {
    throw DomainError(std::string(what) + " requires a simple graph (unit weights, zero potential)");
  }
}

}  // namespace

WeightedGraph::WeightedGraph(int n) : n_(n), potential_(static_cast<std::size_t>(std::max(n, 0)), 0.0) {
  if (n < 0) throw DomainError("vertex count must be non-negative");
}

WeightedGraph::WeightedGraph(int n, const std::vector<Edge>& edges, std::vector<double> potential)
    : WeightedGraph(n) {
  for (const Edge& e : edges) set_edge(e.u, e.v, e.weight);
  if (!potential.empty()) {
    if (static_cast<int>(potential.size()) != n) {
      throw DomainError("potential length " + std::to_string(potential.size()) +
                        " does not match vertex count " + std::to_string(n));
    }
    for (int v = 0; v < n; ++v) set_potential(v, potential[static_cast<std::size_t>(v)]);
  }
}

void WeightedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph on " +
                      std::to_string(n_) + " vertices");
  }
}

void WeightedGraph::set_edge(int i, int j, double weight) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw DomainError("self-loops are expressed through the potential, not as edges");
  if (!std::isfinite(weight) || weight == 0.0) {
    throw DomainError("edge weights must be finite and nonzero");
  }
  edges_[key(i, j)] = weight;
}

void WeightedGraph::remove_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  edges_.erase(key(i, j));
}

void WeightedGraph::set_potential(int v, double value) {
  check_vertex(v);
  if (!std::isfinite(value)) throw DomainError("potential must be finite");
  potential_[static_cast<std::size_t>(v)] = value;
}

bool WeightedGraph::has_edge(int i, int j) const { return edges_.contains(key(i, j)); }

double WeightedGraph::weight(int i, int j) const {
  auto it = edges_.find(key(i, j));
  return it == edges_.end() ? 0.0 : it->second;
}

double WeightedGraph::degree(int v) const {
  check_vertex(v);
  double d = 0.0;
  for (const auto& [e, w] : edges_) {
    if (e.first == v || e.second == v) d += w;
  }
  return d;
}

std::vector<int> WeightedGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [e, w] : edges_) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool WeightedGraph::is_simple() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const auto& kv) { return kv.second == 1.0; }) &&
         std::all_of(potential_.begin(), potential_.end(), [](double p) { return p == 0.0; });
}

std::string_view to_string(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::Adjacency: return "adjacency";
    case HamiltonianKind::Laplacian: return "laplacian";
    case HamiltonianKind::SignlessLaplacian: return "signless";
    case HamiltonianKind::AdjacencyPlusPotential: return "potential";
  }
  return "adjacency";
}

HamiltonianKind parse_hamiltonian_kind(std::string_view name) {
  if (name == "adjacency" || name == "A") return HamiltonianKind::Adjacency;
  if (name == "laplacian" || name == "L") return HamiltonianKind::Laplacian;
  if (name == "signless" || name == "signless-laplacian" || name == "Q") {
    return HamiltonianKind::SignlessLaplacian;
  }
  if (name == "potential" || name == "adjacency-potential" || name == "A+D") {
    return HamiltonianKind::AdjacencyPlusPotential;
  }
  throw DomainError("unknown Hamiltonian kind '" + std::string(name) + "'");
}

Matrix adjacency_matrix(const WeightedGraph& g) {
  Matrix a = Matrix::Zero(g.order(), g.order());
  for (const auto& [e, w] : g.edges()) {
    a(e.first, e.second) = w;
    a(e.second, e.first) = w;
  }
  return a;
}

Matrix degree_matrix(const WeightedGraph& g) {
  Matrix d = Matrix::Zero(g.order(), g.order());
  for (const auto& [e, w] : g.edges()) {
    d(e.first, e.first) += w;
    d(e.second, e.second) += w;
  }
  return d;
}

Matrix hamiltonian(const WeightedGraph& g, HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::Adjacency: return adjacency_matrix(g);
    case HamiltonianKind::AdjacencyPlusPotential: {
      Matrix m = adjacency_matrix(g);
      for (int v = 0; v < g.order(); ++v) m(v, v) += g.potential(v);
      return m;
    }
    case HamiltonianKind::Laplacian:
      require_simple(g, "the Laplacian");
      return degree_matrix(g) - adjacency_matrix(g);
    case HamiltonianKind::SignlessLaplacian:
      require_simple(g, "the signless Laplacian");
      return degree_matrix(g) + adjacency_matrix(g);
  }
  throw DomainError("unknown Hamiltonian kind");
}

ComplementParams complement_params(HamiltonianKind kind, int n) {
  switch (kind) {
    case HamiltonianKind::Adjacency:
    case HamiltonianKind::AdjacencyPlusPotential: return {1, -1.0};
    case HamiltonianKind::Laplacian: return {-1, static_cast<double>(n)};
    case HamiltonianKind::SignlessLaplacian: return {1, static_cast<double>(n - 2)};
  }
  return {};
}

DoubleCoverParams double_cover_params(HamiltonianKind kind) {
  switch (kind) {
    case HamiltonianKind::Adjacency:
    case HamiltonianKind::AdjacencyPlusPotential: return {0, 1};
    case HamiltonianKind::Laplacian: return {1, -1};
    case HamiltonianKind::SignlessLaplacian: return {1, 1};
  }
  return {};
}

WeightedGraph complement(const WeightedGraph& g) {
  require_simple(g, "complement");
  WeightedGraph out(g.order());
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j) {
      if (!g.has_edge(i, j)) out.set_edge(i, j);
    }
  }
  return out;
}

WeightedGraph compose(const WeightedGraph& g, const WeightedGraph& h, ComposeMode mode) {
  if (mode == ComposeMode::Join) {
    require_simple(g, "join");
    require_simple(h, "join");
  }
  const int shift = g.order();
  WeightedGraph out(g.order() + h.order());
  for (const auto& [e, w] : g.edges()) out.set_edge(e.first, e.second, w);
  for (const auto& [e, w] : h.edges()) out.set_edge(e.first + shift, e.second + shift, w);
  for (int v = 0; v < g.order(); ++v) out.set_potential(v, g.potential(v));
  for (int v = 0; v < h.order(); ++v) out.set_potential(v + shift, h.potential(v));
  if (mode == ComposeMode::Join) {
    for (int i = 0; i < g.order(); ++i) {
      for (int j = 0; j < h.order(); ++j) out.set_edge(i, j + shift);
    }
  }
  return out;
}

WeightedGraph circulant(int n, const std::set<int>& connection) {
  if (n < 1) throw DomainError("circulant needs at least one vertex");
  for (int s : connection) {
    if (s <= 0 || s >= n) {
      throw DomainError("connection set entries must lie in 1..n-1, got " + std::to_string(s));
    }
    if (!connection.contains(n - s)) {
      throw DomainError("connection set is not closed under negation mod n (missing " +
                        std::to_string(n - s) + ")");
    }
  }
  WeightedGraph g(n);
  for (int j = 0; j < n; ++j) {
    for (int s : connection) g.set_edge(j, (j + s) % n);
  }
  return g;
}

WeightedGraph cycle(int n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  return circulant(n, {1, n - 1});
}

WeightedGraph path(int n) {
  if (n < 1) throw DomainError("a path needs at least one vertex");
  WeightedGraph g(n);
  for (int j = 0; j + 1 < n; ++j) g.set_edge(j, j + 1);
  return g;
}

WeightedGraph complete(int n) { return complement(empty_graph(n)); }

WeightedGraph empty_graph(int n) { return WeightedGraph(n); }

DoubleCover double_cover(const WeightedGraph& x1, const WeightedGraph& x2) {
  if (x1.order() != x2.order()) {
    throw DomainError("double cover needs graphs on the same vertex set");
  }
  require_simple(x1, "double cover");
  require_simple(x2, "double cover");
  const int n = x1.order();
  DoubleCover out{WeightedGraph(2 * n), false};
  for (const auto& [e, w] : x1.edges()) {
    out.graph.set_edge(e.first, e.second);
    out.graph.set_edge(n + e.first, n + e.second);
    if (x2.has_edge(e.first, e.second)) out.edge_sets_intersect = true;
  }
  for (const auto& [e, w] : x2.edges()) {
    out.graph.set_edge(e.first, n + e.second);
    out.graph.set_edge(e.second, n + e.first);
  }
  return out;
}

std::pair<Matrix, Matrix> signed_cover_hamiltonians(const WeightedGraph& x1, const WeightedGraph& x2,
                                                    HamiltonianKind kind) {
  if (x1.order() != x2.order()) {
    throw DomainError("double cover needs graphs on the same vertex set");
  }
  require_simple(x1, "double cover");
  require_simple(x2, "double cover");
  const auto [eta, delta] = double_cover_params(kind);
  const Matrix a1 = adjacency_matrix(x1);
  const Matrix a2 = adjacency_matrix(x2);
  const Matrix d = degree_matrix(x1) + degree_matrix(x2);
  return {eta * d + delta * (a1 + a2), eta * d + delta * (a1 - a2)};
}

std::string_view to_string(PathVariant variant) {
  switch (variant) {
    case PathVariant::Plain: return "plain";
    case PathVariant::Sqrt2BothEnds: return "sqrt2_both_ends";
    case PathVariant::Sqrt2OneEndPot: return "sqrt2_one_end_pot";
    case PathVariant::PotBothEnds: return "pot_both_ends";
    case PathVariant::PendantsOneEnd: return "pendants_one_end";
    case PathVariant::PendantsBothEnds: return "pendants_both_ends";
  }
  return "plain";
}

PathVariant parse_path_variant(std::string_view name) {
  for (auto v : {PathVariant::Plain, PathVariant::Sqrt2BothEnds, PathVariant::Sqrt2OneEndPot,
                 PathVariant::PotBothEnds, PathVariant::PendantsOneEnd, PathVariant::PendantsBothEnds}) {
    if (to_string(v) == name) return v;
  }
  throw DomainError("unknown path variant '" + std::string(name) + "'");
}

WeightedGraph path_family(int n, PathVariant variant) {
  const int min_n = variant == PathVariant::Sqrt2BothEnds ? 3 : 2;
  if (n < min_n) {
    throw DomainError("path variant " + std::string(to_string(variant)) + " needs n >= " +
                      std::to_string(min_n));
  }
  const double root2 = std::sqrt(2.0);
  switch (variant) {
    case PathVariant::Plain: return path(n);
    case PathVariant::Sqrt2BothEnds: {
      WeightedGraph g = path(n);
      g.set_edge(0, 1, root2);
      g.set_edge(n - 2, n - 1, root2);
      return g;
    }
    case PathVariant::Sqrt2OneEndPot: {
      WeightedGraph g = path(n);
      g.set_edge(0, 1, root2);
      g.set_potential(n - 1, 1.0);
      return g;
    }
    case PathVariant::PotBothEnds: {
      WeightedGraph g = path(n);
      g.set_potential(0, 1.0);
      g.set_potential(n - 1, 1.0);
      return g;
    }
    case PathVariant::PendantsOneEnd: {
      WeightedGraph g = disjoint_union(path(n), empty_graph(2));
      g.set_edge(0, n);
      g.set_edge(0, n + 1);
      g.set_potential(n - 1, 1.0);
      return g;
    }
    case PathVariant::PendantsBothEnds: {
      WeightedGraph g = disjoint_union(path(n), empty_graph(4));
      g.set_edge(0, n);
      g.set_edge(0, n + 1);
      g.set_edge(n - 1, n + 2);
      g.set_edge(n - 1, n + 3);
      return g;
    }
  }
  throw DomainError("unknown path variant");
}

}  // namespace wt
