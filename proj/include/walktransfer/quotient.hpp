#pragma once

#include <optional>
#include <string>
#include <vector>

#include "walktransfer/graph.hpp"
#include "walktransfer/pgst.hpp"

namespace wt {

using Cells = std::vector<std::vector<int>>;

struct EquitablePartition {
  Cells cells;
  /// counts(j, k): weighted neighbours of any vertex of cell j inside cell k;
  /// the diagonal also carries the vertex potential.
  Matrix counts;

  int size() const { return static_cast<int>(cells.size()); }
};

struct EquitabilityResult {
  std::optional<EquitablePartition> partition;
  int violating_vertex = -1;
  int violating_cell = -1;
};

inline constexpr double kEquitableTol = 1e-12;

/// Throws DomainError unless cells are non-empty, disjoint and cover 0..n-1.
EquitabilityResult verify_equitable(const WeightedGraph& g, const Cells& cells, double tol = kEquitableTol);

/// Cell-ordered quotient: weight sqrt(c_jk c_kj) between cells, potential c_jj.
WeightedGraph quotient_graph(const WeightedGraph& g, const EquitablePartition& part);

/// d x n matrix whose row j is the indicator of cell j scaled by |V_j|^(-1/2).
Matrix cell_matrix(const EquitablePartition& part, int n);

struct IntertwinerReport {
  std::vector<double> times;
  std::vector<double> deviations;  // max |U_g(t) S^T - S^T U_q(t)| per time
  double max_deviation = 0.0;
  bool holds = false;
};

/// kind is Adjacency (g without potential) or AdjacencyPlusPotential; the
/// quotient always evolves under A + potential. Throws when part is not an
/// equitable partition of g.
IntertwinerReport intertwiner_check(const WeightedGraph& g, const EquitablePartition& part, HamiltonianKind kind,
                                    const std::vector<double>& t_samples, double tol = kDefaultCheckTol);

// ----------------------------------------------------- weighted path suite

struct PathSuiteRow {
  PathVariant variant = PathVariant::Sqrt2BothEnds;
  int n = 0;
  int cycle_order = 0;
  int quotient_order = 0;
  std::string transfer;  // what the verdict is about
  bool quotient_matches = false;
  /// Pendant variants: the pendant graph collapses onto the same path.
  std::optional<bool> pendant_quotient_matches;
  double intertwiner_deviation = 0.0;
  bool intertwiner_holds = false;
  bool expected = false;  // from the closed-form condition on n
  bool verdict = false;   // from the cycle-level characterization
  std::string rule;
  std::vector<Evidence> evidence;
  bool pass = false;
};

struct PathSuiteCase {
  PathVariant variant;
  int n;
};

std::vector<PathSuiteCase> default_path_suite_cases();

/// Each row builds the path, the cycle and partition that collapse onto it,
/// checks the quotient and the intertwining identity, and reports the
/// verdict implied by the cycle together with sweep or certificate evidence.
std::vector<PathSuiteRow> weighted_path_pgst_suite(const std::vector<PathSuiteCase>& cases = default_path_suite_cases(),
                                                   double t_max = 200.0);

}  // namespace wt
