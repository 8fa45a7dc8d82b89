#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace wt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Raised when an operation's preconditions on its inputs do not hold
/// (non-simple graph for a Laplacian, malformed partition, bad state syntax, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace wt
