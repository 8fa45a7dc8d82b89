#pragma once

#include <string_view>

#include "walktransfer/types.hpp"

namespace wt {

/// Real unit vector over the vertex set.
class PureState {
 public:
  /// Throws unless ||v|| = 1 within 1e-12.
  static PureState from_vector(Vector v);
  /// Rescales a nonzero vector to unit length.
  static PureState normalized(Vector v);

  int size() const { return static_cast<int>(v_.size()); }
  const Vector& vec() const { return v_; }
  operator const Vector&() const { return v_; }
  double operator[](int i) const { return v_(i); }

 private:
  explicit PureState(Vector v) : v_(std::move(v)) {}
  Vector v_;
};

PureState vertex_state(int n, int a);
/// (e_a + s e_b) / sqrt(1 + s^2).
PureState s_pair_state(int n, int a, int b, double s);
inline PureState plus_state(int n, int a, int b) { return s_pair_state(n, a, b, 1.0); }
inline PureState pair_state(int n, int a, int b) { return s_pair_state(n, a, b, -1.0); }

/// "v:a", "plus:a,b", "pair:a,b", "spair:a,b,s" or a JSON array of n numbers
/// (rescaled to unit length).
PureState parse_state(std::string_view text, int n);

}  // namespace wt
