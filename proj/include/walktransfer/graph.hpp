#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walktransfer/types.hpp"

namespace wt {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
};

/// Undirected graph on vertices 0..n-1 with real edge weights and a real
/// potential per vertex. Loops are not edges; a loop of weight w is the
/// potential w at that vertex.
class WeightedGraph {
 public:
  using EdgeMap = std::map<std::pair<int, int>, double>;

  WeightedGraph() = default;
  explicit WeightedGraph(int n);
  WeightedGraph(int n, const std::vector<Edge>& edges, std::vector<double> potential = {});

  int order() const { return n_; }

  /// Inserts or overwrites the edge {i, j}. Throws on i == j, out-of-range
  /// endpoints, or a zero / non-finite weight.
  void set_edge(int i, int j, double weight = 1.0);
  void remove_edge(int i, int j);
  void set_potential(int v, double value);

  bool has_edge(int i, int j) const;
  /// Weight of {i, j}, or 0 when absent.
  double weight(int i, int j) const;
  double potential(int v) const { return potential_.at(static_cast<std::size_t>(v)); }
  const std::vector<double>& potentials() const { return potential_; }
  /// Keys are ordered pairs (min, max).
  const EdgeMap& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sum of incident edge weights (potential excluded).
  double degree(int v) const;
  std::vector<int> neighbors(int v) const;

  /// All weights equal 1 and the potential is identically zero.
  bool is_simple() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  EdgeMap edges_;
  std::vector<double> potential_;
};

enum class HamiltonianKind { Adjacency, Laplacian, SignlessLaplacian, AdjacencyPlusPotential };

std::string_view to_string(HamiltonianKind kind);
HamiltonianKind parse_hamiltonian_kind(std::string_view name);

Matrix adjacency_matrix(const WeightedGraph& g);
Matrix degree_matrix(const WeightedGraph& g);

/// Adjacency returns A, AdjacencyPlusPotential returns A + diag(potential),
/// Laplacian D - A and SignlessLaplacian D + A. The two Laplacians require
/// a simple graph.
Matrix hamiltonian(const WeightedGraph& g, HamiltonianKind kind);

/// M(complement) = delta * J + zeta * I - M(g) for simple g on n vertices.
struct ComplementParams {
  int delta = 1;
  double zeta = -1.0;
};
ComplementParams complement_params(HamiltonianKind kind, int n);

/// M(X1 x X2) blocks are eta * D + delta * A(X1) and delta * A(X2).
struct DoubleCoverParams {
  int eta = 0;
  int delta = 1;
};
DoubleCoverParams double_cover_params(HamiltonianKind kind);

WeightedGraph complement(const WeightedGraph& g);

enum class ComposeMode { Union, Join };
WeightedGraph compose(const WeightedGraph& g, const WeightedGraph& h, ComposeMode mode);
inline WeightedGraph disjoint_union(const WeightedGraph& g, const WeightedGraph& h) {
  return compose(g, h, ComposeMode::Union);
}
inline WeightedGraph join(const WeightedGraph& g, const WeightedGraph& h) {
  return compose(g, h, ComposeMode::Join);
}

/// Vertex j adjacent to j + s (mod n) for every s in the connection set.
WeightedGraph circulant(int n, const std::set<int>& connection);
WeightedGraph cycle(int n);
WeightedGraph path(int n);
WeightedGraph complete(int n);
WeightedGraph empty_graph(int n);

/// Two-layer graph; vertex (layer, v) is layer * n + v.
struct DoubleCover {
  WeightedGraph graph;
  /// X1 and X2 share an edge, so the result is not a double cover in the
  /// strict sense (its base would not be A(X1) + A(X2) of a simple graph).
  bool edge_sets_intersect = false;
};
DoubleCover double_cover(const WeightedGraph& x1, const WeightedGraph& x2);

/// M(G+) and M(G-) = eta * D + delta * (A(X1) +/- A(X2)), D = D(X1) + D(X2).
std::pair<Matrix, Matrix> signed_cover_hamiltonians(const WeightedGraph& x1,
                                                    const WeightedGraph& x2,
                                                    HamiltonianKind kind);

enum class PathVariant {
  Plain,
  Sqrt2BothEnds,    // w(0,1) = w(n-2,n-1) = sqrt(2)
  Sqrt2OneEndPot,   // w(0,1) = sqrt(2), potential 1 at n-1
  PotBothEnds,      // potential 1 at 0 and n-1
  PendantsOneEnd,   // two pendants on vertex 0, potential 1 at n-1
  PendantsBothEnds  // two pendants on each end vertex
};

std::string_view to_string(PathVariant variant);
PathVariant parse_path_variant(std::string_view name);

/// Path on vertices 0..n-1, decorated per variant. Pendant vertices are
/// appended after the path: n, n+1 hang off 0 and n+2, n+3 off n-1.
WeightedGraph path_family(int n, PathVariant variant);

}  // namespace wt
