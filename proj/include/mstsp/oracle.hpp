#pragma once

#include <cstdint>
#include <vector>

#include "mstsp/grid.hpp"

namespace mstsp {

/// Node cap for the exact solver. The subset DP needs 2^(N-1) words, so
/// the default keeps a query around 33 MB; the hard cap around 134 MB.
inline constexpr int kDefaultOracleLimit = 24;
inline constexpr int kOracleHardCap = 26;

/// Sorted distinct squared edge lengths occurring in the grid
/// (all dr^2 + dc^2 for 0 <= dr < m, 0 <= dc < n, excluding 0).
std::vector<SquaredLength> distinct_thresholds(const GridDims& dims);

/// Complete grid graph restricted to edges of squared length >= the
/// threshold. Raising the threshold only removes edges.
struct ThresholdGraph {
  GridDims dims;
  SquaredLength threshold_sq;
  std::vector<std::uint32_t> adj;  // bitmask adjacency over node indices
};

ThresholdGraph make_threshold_graph(const GridDims& dims, SquaredLength threshold_sq);

struct CycleSearch {
  bool found = false;
  std::vector<GridPoint> cycle;  // a witness Hamiltonian cycle when found
};

struct HamSearchOptions {
  int node_limit = kDefaultOracleLimit;
  // Steps granted to the backtracking pass before the subset DP takes
  // over. Zero forces every decision through the DP.
  std::int64_t backtrack_budget = 200'000;
};

/// Exact Hamiltonian-cycle decision on a threshold graph. Degree and
/// connectivity pruning, then bounded backtracking, then subset DP over
/// (visited set, endpoint); never heuristic. Refuses graphs over
/// node_limit nodes.
CycleSearch has_hamiltonian_cycle(const ThresholdGraph& graph,
                                  int node_limit = kDefaultOracleLimit);
CycleSearch has_hamiltonian_cycle(const ThresholdGraph& graph,
                                  const HamSearchOptions& options);

/// Exact optimum with a certifying tour.
struct OracleResult {
  GridDims dims;
  SquaredLength opt_sq;
  Tour witness;
};

/// Binary search over distinct_thresholds for the largest threshold whose
/// graph is Hamiltonian. The search keeps a feasible/infeasible bracket
/// and fails hard if feasibility is ever non-monotone.
OracleResult solve_exact(const GridDims& dims, int node_limit = kDefaultOracleLimit);

/// Exhaustive enumeration of all (N-1)!/2 cyclic orders; ground truth for
/// solve_exact on grids with at most 9 nodes.
OracleResult brute_force_small(const GridDims& dims);

}  // namespace mstsp
