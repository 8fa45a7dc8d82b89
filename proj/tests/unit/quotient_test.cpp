#include <doctest.h>

#include "../oracles.hpp"
#include "walktransfer/quotient.hpp"
#include "walktransfer/states.hpp"

using namespace wt;

namespace {

// Orbits of j -> -j on Z_n.
Cells reflection_cells(int n) {
  Cells cells;
  for (int j = 0; j <= n / 2; ++j) {
    if (j == 0 || 2 * j == n) {
      cells.push_back({j});
    } else {
      cells.push_back({j, n - j});
    }
  }
  return cells;
}

// Cosets of the subgroup generated by d in Z_n.
Cells coset_cells(int n, int d) {
  Cells cells(static_cast<std::size_t>(d));
  for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(j % d)].push_back(j);
  return cells;
}

}  // namespace

TEST_CASE("C8 collapses to the sqrt2-end path") {
  const auto r = verify_equitable(cycle(8), reflection_cells(8));
  REQUIRE(r.partition);
  const WeightedGraph q = quotient_graph(cycle(8), *r.partition);
  CHECK(q.order() == 5);
  CHECK(std::abs(q.weight(0, 1) - std::sqrt(2.0)) <= 1e-15);
  CHECK(q.weight(1, 2) == 1.0);
  CHECK(q == path_family(5, PathVariant::Sqrt2BothEnds));
}

TEST_CASE("non-equitable partitions report a witness") {
  const auto r = verify_equitable(path(4), Cells{{0, 1}, {2, 3}});
  CHECK_FALSE(r.partition);
  CHECK(r.violating_vertex >= 0);
  CHECK(r.violating_cell >= 0);
  CHECK_THROWS_AS(verify_equitable(path(4), Cells{{0, 1}, {1, 2, 3}}), DomainError);
  CHECK_THROWS_AS(verify_equitable(path(4), Cells{{0, 1}, {2}}), DomainError);
  CHECK_THROWS_AS(verify_equitable(path(4), Cells{{0, 1}, {}, {2, 3}}), DomainError);
}

TEST_CASE("singleton partition gives back the graph") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = oracle::random_graph(rng, 6);
    Cells cells;
    for (int v = 0; v < 6; ++v) cells.push_back({v});
    const auto r = verify_equitable(g, cells);
    REQUIRE(r.partition);
    CHECK(quotient_graph(g, *r.partition) == g);
    CHECK(cell_matrix(*r.partition, 6) == Matrix::Identity(6, 6));
  }
}

TEST_CASE("orbit partitions of circulants intertwine") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> when(0.0, 30.0);
  std::vector<double> times;
  for (int k = 0; k < 20; ++k) times.push_back(when(rng));
  for (int n = 5; n <= 12; ++n) {
    std::set<int> conn;
    for (int s = 1; s <= n / 2; ++s) {
      if (rng() % 2 == 0) {
        conn.insert(s);
        conn.insert(n - s);
      }
    }
    if (conn.empty()) conn = {1, n - 1};
    const WeightedGraph g = circulant(n, conn);
    std::vector<Cells> partitions{reflection_cells(n)};
    for (int d = 2; d < n; ++d) {
      if (n % d == 0) partitions.push_back(coset_cells(n, d));
    }
    for (const Cells& cells : partitions) {
      const auto r = verify_equitable(g, cells);
      REQUIRE(r.partition);
      const IntertwinerReport ir = intertwiner_check(g, *r.partition, HamiltonianKind::Adjacency, times);
      CHECK(ir.holds);
      CHECK(ir.deviations.size() == 20);
      // Oracle for the same identity.
      const Matrix st = cell_matrix(*r.partition, n).transpose();
      const Matrix aq = hamiltonian(quotient_graph(g, *r.partition), HamiltonianKind::AdjacencyPlusPotential);
      const Matrix ag = hamiltonian(g, HamiltonianKind::Adjacency);
      CHECK(oracle::max_abs(oracle::expm_walk(ag, times[3]) * st.cast<Complex>() -
                            st.cast<Complex>() * oracle::expm_walk(aq, times[3])) < 1e-9);
    }
  }
}

TEST_CASE("two-element cells lift to plus states") {
  const auto r = verify_equitable(cycle(8), reflection_cells(8));
  REQUIRE(r.partition);
  const Matrix s = cell_matrix(*r.partition, 8);
  const Vector lifted = s.transpose() * vertex_state(5, 1).vec();
  CHECK((lifted - plus_state(8, 1, 7).vec()).norm() < 1e-15);
  CHECK((s * s.transpose() - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("path suite rows all pass") {
  const auto rows = weighted_path_pgst_suite({{PathVariant::PotBothEnds, 4},
                                              {PathVariant::PotBothEnds, 3},
                                              {PathVariant::Sqrt2OneEndPot, 4},
                                              {PathVariant::PendantsBothEnds, 3}});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].cycle_order == 8);
  CHECK(rows[0].verdict);
  CHECK_FALSE(rows[1].verdict);
  CHECK(rows[2].cycle_order == 7);
  CHECK_FALSE(rows[2].verdict);
  CHECK(rows[3].verdict);
  CHECK(rows[3].pendant_quotient_matches.value_or(false));
  for (const auto& row : rows) {
    CHECK(row.pass);
    CHECK(row.quotient_matches);
    CHECK(row.intertwiner_holds);
  }
}
