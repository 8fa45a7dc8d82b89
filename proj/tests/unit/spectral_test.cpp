#include <doctest.h>

#include "../oracles.hpp"
#include "walktransfer/spectral.hpp"
#include "walktransfer/states.hpp"

using namespace wt;

TEST_CASE("projector algebra and reconstruction") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = oracle::random_graph(rng, 2 + trial % 10);
    const Matrix m = hamiltonian(g, HamiltonianKind::Laplacian);
    const SpectralDecomposition dec = decompose(m);
    const int n = g.order();
    Matrix sum = Matrix::Zero(n, n);
    Matrix recon = Matrix::Zero(n, n);
    int mult = 0;
    for (int j = 0; j < dec.size(); ++j) {
      const Matrix& e = dec.projectors[static_cast<std::size_t>(j)];
      CHECK((e * e - e).cwiseAbs().maxCoeff() < 1e-10);
      sum += e;
      recon += dec.eigenvalues[static_cast<std::size_t>(j)] * e;
      mult += dec.multiplicity(j);
      if (j > 0) CHECK(dec.eigenvalues[static_cast<std::size_t>(j)] > dec.eigenvalues[static_cast<std::size_t>(j - 1)]);
    }
    CHECK(mult == n);
    CHECK((sum - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((recon - m).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("transition matches the matrix exponential") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = hamiltonian(oracle::random_graph(rng, 7), HamiltonianKind::Adjacency);
    const SpectralDecomposition dec = decompose(m);
    for (double t : {0.0, 0.3, 2.0, 17.5}) {
      CHECK(oracle::max_abs(transition(dec, t) - oracle::expm_walk(m, t)) < 1e-9);
    }
  }
}

TEST_CASE("cycle eigenvalues have the cosine multiplicities") {
  for (int n = 3; n <= 12; ++n) {
    const SpectralDecomposition dec = decompose(hamiltonian(cycle(n), HamiltonianKind::Adjacency));
    CHECK(dec.size() == n / 2 + 1);
    CHECK(dec.eigenvalues.back() == doctest::Approx(2.0));
    const CycleSpectrum cs = cycle_exact_spectrum(n);
    for (int l = 0; l < n; ++l) {
      CHECK(cs.lambdas[static_cast<std::size_t>(l)] == doctest::Approx(2.0 * std::cos(2.0 * kPi * l / n)));
    }
  }
  CHECK(two_cos_rational(1, 4) == 0.0);
  CHECK(two_cos_rational(1, 2) == -2.0);
}

TEST_CASE("non-symmetric input is rejected") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(decompose(m), DomainError);
}

TEST_CASE("support and fixed states") {
  const SpectralDecomposition dec = decompose(hamiltonian(cycle(4), HamiltonianKind::Adjacency));
  CHECK(eigenvalue_support(dec, vertex_state(4, 0)).size() == 3);
  // e0 - e2 lies in the 0-eigenspace of C4.
  CHECK(is_fixed_state(dec, pair_state(4, 0, 2)));
  CHECK_FALSE(is_fixed_state(dec, vertex_state(4, 0)));
  CHECK(is_periodic(dec, vertex_state(4, 0), kPi).holds);
}

TEST_CASE("states") {
  CHECK(vertex_state(3, 1)[1] == 1.0);
  CHECK(plus_state(4, 0, 2).vec().norm() == doctest::Approx(1.0));
  CHECK(pair_state(4, 0, 2)[2] == doctest::Approx(-std::sqrt(0.5)));
  CHECK(parse_state("plus:1,3", 4)[3] == doctest::Approx(std::sqrt(0.5)));
  CHECK(parse_state("[3, 4]", 2)[1] == doctest::Approx(0.8));
  CHECK(parse_state("spair:0,1,2", 2)[1] == doctest::Approx(2.0 / std::sqrt(5.0)));
  CHECK_THROWS_AS(parse_state("v:9", 4), DomainError);
  CHECK_THROWS_AS(parse_state("bogus", 4), DomainError);
  CHECK_THROWS_AS(PureState::from_vector(Vector::Ones(2)), DomainError);
}
