#include <doctest.h>

#include "../oracles.hpp"
#include "walktransfer/graph.hpp"

using namespace wt;

TEST_CASE("edges are symmetric and validated") {
  WeightedGraph g(3);
  g.set_edge(2, 0, 1.5);
  CHECK(g.has_edge(0, 2));
  CHECK(g.weight(2, 0) == 1.5);
  CHECK(g.edges().begin()->first == std::pair{0, 2});
  CHECK_THROWS_AS(g.set_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.set_edge(0, 3), DomainError);
  CHECK_THROWS_AS(g.set_edge(0, 1, 0.0), DomainError);
  g.remove_edge(0, 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("hamiltonians of the 4-cycle") {
  const WeightedGraph c4 = cycle(4);
  const Matrix a = hamiltonian(c4, HamiltonianKind::Adjacency);
  CHECK(a.sum() == 8.0);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(0, 2) == 0.0);
  const Matrix l = hamiltonian(c4, HamiltonianKind::Laplacian);
  CHECK(l.rowwise().sum().cwiseAbs().maxCoeff() == 0.0);
  const Matrix q = hamiltonian(c4, HamiltonianKind::SignlessLaplacian);
  CHECK(q(0, 0) == 2.0);
  CHECK(q(0, 1) == 1.0);
}

TEST_CASE("laplacians reject weighted graphs") {
  const WeightedGraph p = path_family(4, PathVariant::Sqrt2BothEnds);
  CHECK_THROWS_AS(hamiltonian(p, HamiltonianKind::Laplacian), DomainError);
  const Matrix m = hamiltonian(path_family(4, PathVariant::PotBothEnds), HamiltonianKind::AdjacencyPlusPotential);
  CHECK(m(0, 0) == 1.0);
  CHECK(m(3, 3) == 1.0);
  CHECK(m(1, 1) == 0.0);
}

TEST_CASE("complement identity on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightedGraph g = oracle::random_graph(rng, 2 + trial % 9);
    const int n = g.order();
    const WeightedGraph gc = complement(g);
    CHECK(g.edge_count() + gc.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(complement(gc) == g);
    for (HamiltonianKind kind : {HamiltonianKind::Adjacency, HamiltonianKind::Laplacian,
                                 HamiltonianKind::SignlessLaplacian}) {
      const ComplementParams p = complement_params(kind, n);
      const Matrix rhs = p.delta * Matrix::Ones(n, n) + p.zeta * Matrix::Identity(n, n) - hamiltonian(g, kind);
      CHECK((hamiltonian(gc, kind) - rhs).cwiseAbs().maxCoeff() == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("families") {
  CHECK(cycle(5).edge_count() == 5);
  CHECK(path(5).edge_count() == 4);
  CHECK(complete(5).edge_count() == 10);
  CHECK(empty_graph(5).edge_count() == 0);
  CHECK(circulant(6, {1, 5}) == cycle(6));
  CHECK(circulant(5, {1, 2, 3, 4}) == complete(5));
  const WeightedGraph j = join(path(2), empty_graph(2));
  CHECK(j.order() == 4);
  CHECK(j.edge_count() == 5);
  CHECK(disjoint_union(path(2), path(2)).edge_count() == 2);
}

TEST_CASE("path variants") {
  const WeightedGraph a = path_family(5, PathVariant::Sqrt2BothEnds);
  CHECK(a.weight(0, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(a.weight(3, 4) == doctest::Approx(std::sqrt(2.0)));
  const WeightedGraph b = path_family(4, PathVariant::Sqrt2OneEndPot);
  CHECK(b.potential(3) == 1.0);
  const WeightedGraph c = path_family(3, PathVariant::PendantsBothEnds);
  CHECK(c.order() == 7);
  CHECK(c.has_edge(0, 3));
  CHECK(c.has_edge(0, 4));
  CHECK(c.has_edge(2, 5));
  CHECK(c.has_edge(2, 6));
  CHECK(parse_path_variant(to_string(PathVariant::PendantsOneEnd)) == PathVariant::PendantsOneEnd);
  CHECK_THROWS_AS(parse_path_variant("nope"), DomainError);
}

TEST_CASE("double cover of a path and an edge is the 8-cycle") {
  WeightedGraph x2(4);
  x2.set_edge(0, 3);
  const DoubleCover dc = double_cover(path(4), x2);
  CHECK_FALSE(dc.edge_sets_intersect);
  CHECK(dc.graph == cycle(8));
  CHECK(double_cover(path(3), path(3)).edge_sets_intersect);
}
