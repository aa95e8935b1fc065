#pragma once

#include <optional>

#include "mstsp/grid.hpp"

namespace mstsp {

/// Structure class of a grid after orienting m <= n. Exactly one case
/// applies per grid.
struct WeaveCase {
  enum class Kind {
    tiny,                 // max(m,n) <= 2
    line,                 // m = 1, n >= 3
    even_rows_odd_cols,
    even_rows_even_cols,
    odd_rows_odd_cols,
    odd_rows_even_cols,
  };
  Kind kind = Kind::tiny;
  bool cols_multiple_of_3 = false;
  bool three_rows = false;
};

WeaveCase classify_case(const GridDims& dims);
std::string case_name(const WeaveCase& c);

/// Successor column of node (i,j); independent of i and identical to
/// line_next(n, j). Requires canonical dims with n >= 3.
int next_col(const GridDims& dims, int i, int j);

/// Successor row of node (i,j), or nullopt at the tour's final node.
/// Requires canonical dims with m >= 2, n >= 3.
std::optional<int> next_row(const GridDims& dims, int i, int j);

/// Combined successor (next_row, next_col); nullopt terminates the walk.
/// Defined for every node: each non-terminal node has exactly one
/// successor and exactly one node terminates.
std::optional<GridPoint> successor(const GridDims& dims, GridPoint p);

/// First node of the walk: (1, k+2) for m >= 2, (1,1) for a single row.
GridPoint start_node(const GridDims& dims);

/// Builds the weave tour for any grid with at least 3 nodes. Rows are
/// paired at vertical distance t (plus one triple (1, t+1, m) when m is
/// odd) while columns cycle in the line order. Runs in O(m*n); validates
/// its own output and throws InternalError rather than returning a tour
/// that is not a single Hamiltonian cycle.
Tour build_tour(const GridDims& dims);

}  // namespace mstsp
