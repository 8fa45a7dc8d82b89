#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "walktransfer/graph.hpp"
#include "walktransfer/json_io.hpp"
#include "walktransfer/quotient.hpp"

namespace wt {

struct SuiteCheck {
  std::string battery;
  std::string label;
  bool pass = false;
  double value = 0.0;      // measured quantity (deviation, residual, count, ...)
  double threshold = 0.0;  // what value was compared against
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;
  std::vector<PathSuiteRow> path_rows;
  bool all_pass = false;
};

inline constexpr std::uint64_t kDefaultSuiteSeed = 20240607;

/// name: all, spectral, pst, complement, doublecover, cycles or paths.
/// Throws DomainError for any other name.
SuiteReport verify_suite(std::string_view name, std::uint64_t seed = kDefaultSuiteSeed);

Json suite_to_json(const SuiteReport& report);

/// Aligned pass/fail table.
std::string format_suite_text(const SuiteReport& report);

/// Small deterministic generator: splitmix64.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in lo..hi inclusive.
  int range(int lo, int hi);

 private:
  std::uint64_t state_;
};

/// Erdos-Renyi style simple graph with edge probability p.
WeightedGraph random_simple_graph(SeededRng& rng, int n, double p = 0.5);

}  // namespace wt
