#pragma once

// Reference computations used by the tests. None of these go through the
// library's spectral grouping: U(t) comes from Eigen's matrix exponential.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include "walktransfer/graph.hpp"

namespace oracle {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

inline CMat expm_walk(const Eigen::MatrixXd& m, double t) {
  const CMat x = std::complex<double>(0.0, t) * m.cast<std::complex<double>>();
  return x.exp();
}

inline double max_abs(const CMat& m) { return m.cwiseAbs().maxCoeff(); }

// || U(t) u - gamma v || minimised over the phase gamma.
inline double pst_residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& u, const Eigen::VectorXd& v, double t) {
  const CVec x = expm_walk(m, t) * u.cast<std::complex<double>>();
  const std::complex<double> overlap = v.cast<std::complex<double>>().dot(x);
  const std::complex<double> phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : 1.0;
  return (x - phase * v.cast<std::complex<double>>()).norm();
}

inline wt::WeightedGraph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  wt::WeightedGraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) g.set_edge(i, j);
    }
  }
  return g;
}

inline bool is_power_of_two(int n) {
  int x = 1;
  while (x < n) x *= 2;
  return x == n;
}

inline bool prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline int odd_part(int n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

}  // namespace oracle
