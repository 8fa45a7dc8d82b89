#pragma once

#include <string_view>

#include "walktransfer/types.hpp"

namespace wt {

enum class WitnessKind { Pst, Fr, Periodic };

inline std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Pst: return "pst";
    case WitnessKind::Fr: return "fr";
    case WitnessKind::Periodic: return "periodic";
  }
  return "pst";
}

/// Outcome of a PST / FR / periodicity check at a single time.
struct TransferWitness {
  WitnessKind kind = WitnessKind::Pst;
  double time = 0.0;
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};
  Complex gamma{0.0, 0.0};  // unit phase; meaningful for pst and periodic
  double residual = 0.0;
  double tol = 0.0;
  bool holds = false;
  /// FR only: v was orthonormalized against u before reading off beta.
  bool frame_changed = false;
};

inline constexpr double kDefaultCheckTol = 1e-8;

}  // namespace wt
