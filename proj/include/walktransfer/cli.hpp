#pragma once

#include <iosfwd>
#include <string_view>

#include "walktransfer/graph.hpp"

namespace wt {

/// Exit codes: 0 success, 1 a checked property does not hold, 2 usage or
/// input error (one-line diagnostic on err).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// --graph accepts a JSON file or a built-in family: cycle:N, path:N,
/// complete:N, empty:N, circulant:N:s1,s2,..., path-family:VARIANT:N, and
/// complement:SPEC.
WeightedGraph load_graph(std::string_view spec);

}  // namespace wt
