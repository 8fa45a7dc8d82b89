#include <doctest.h>

#include "../oracles.hpp"
#include "walktransfer/states.hpp"
#include "walktransfer/transfer.hpp"

using namespace wt;

TEST_CASE("vertex PST on P2 and C4 agrees with the oracle") {
  for (auto [g, a, b] : {std::tuple{path(2), 0, 1}, std::tuple{cycle(4), 0, 2}}) {
    const Matrix m = hamiltonian(g, HamiltonianKind::Adjacency);
    const int n = g.order();
    const TransferWitness w = check_pst(decompose(m), vertex_state(n, a), vertex_state(n, b), kPi / 2);
    CHECK(w.holds);
    CHECK(std::abs(w.gamma) == doctest::Approx(1.0));
    CHECK(oracle::pst_residual(m, vertex_state(n, a), vertex_state(n, b), kPi / 2) < 1e-10);
  }
  const SpectralDecomposition c4 = decompose(hamiltonian(cycle(4), HamiltonianKind::Adjacency));
  CHECK_FALSE(check_pst(c4, vertex_state(4, 0), vertex_state(4, 1), kPi / 2).holds);
}

TEST_CASE("fractional revival from a PST time") {
  const SpectralDecomposition dec = decompose(hamiltonian(path(2), HamiltonianKind::Adjacency));
  const TransferWitness w = check_fr(dec, vertex_state(2, 0), vertex_state(2, 1), kPi / 4);
  CHECK(w.holds);
  CHECK(std::abs(w.alpha) == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::abs(w.beta) == doctest::Approx(std::sqrt(0.5)));
  const TransferWitness at_zero = check_fr(dec, vertex_state(2, 0), vertex_state(2, 1), 0.0);
  CHECK_FALSE(at_zero.holds);
}

TEST_CASE("fractional revival with a non-orthogonal target changes frame") {
  const SpectralDecomposition dec = decompose(hamiltonian(path(2), HamiltonianKind::Adjacency));
  const TransferWitness w = check_fr(dec, vertex_state(2, 0), plus_state(2, 0, 1), kPi / 4);
  CHECK(w.frame_changed);
  CHECK(w.holds);
}

TEST_CASE("dependent states are rejected") {
  const SpectralDecomposition dec = decompose(hamiltonian(path(3), HamiltonianKind::Adjacency));
  CHECK_THROWS(check_pst(dec, vertex_state(3, 0), vertex_state(3, 0), 1.0));
}

TEST_CASE("Krylov identity for pair states orthogonal to 1") {
  const std::vector<double> times{0.1, 0.7, 3.0};
  const KrylovReport r = krylov_complement_identity(path(5), HamiltonianKind::Adjacency, pair_state(5, 0, 4), times);
  CHECK(r.condition_holds);
  CHECK(r.identity_holds);
  const KrylovReport bad = krylov_complement_identity(path(5), HamiltonianKind::Adjacency, vertex_state(5, 0), times);
  CHECK_FALSE(bad.condition_holds);
  CHECK(bad.failing_power == 0);
}

TEST_CASE("complement transport of fractional revival") {
  // C4 is regular; vertex PST 0 -> 2 at pi/2 and 4 * pi/2 lies in 2 pi Z.
  const ComplementTransportReport r =
      complement_fr_transport(cycle(4), HamiltonianKind::Adjacency, vertex_state(4, 0), vertex_state(4, 2), kPi / 2);
  CHECK(r.applicable);
  CHECK(r.holds);
  CHECK(r.in_complement.holds);
  CHECK_THROWS(complement_fr_transport(path(3), HamiltonianKind::Adjacency, vertex_state(3, 0), vertex_state(3, 2),
                                       kPi / 2));
}

TEST_CASE("double cover block identity on random pairs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph x1 = oracle::random_graph(rng, 4);
    const WeightedGraph x2 = oracle::random_graph(rng, 4);
    for (HamiltonianKind kind : {HamiltonianKind::Adjacency, HamiltonianKind::Laplacian,
                                 HamiltonianKind::SignlessLaplacian}) {
      CHECK(double_cover_block_identity(x1, x2, kind, 1.3).holds);
    }
  }
}

TEST_CASE("double cover correspondences agree on both sides") {
  WeightedGraph x2(4);
  x2.set_edge(0, 3);
  for (int s = 1; s <= 5; ++s) {
    const CoverEquivalenceReport r =
        double_cover_fr_equivalence(path(4), x2, HamiltonianKind::Adjacency, vertex_state(4, 0), vertex_state(4, 2),
                                    kPi / 2, s);
    CHECK(r.statement == s);
    CHECK(r.agree);
  }
  CHECK_THROWS(double_cover_fr_equivalence(path(4), x2, HamiltonianKind::Adjacency, vertex_state(4, 0),
                                           vertex_state(4, 2), kPi / 2, 6));
}
