#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mstsp {

// A construction broke one of its own guarantees. The CLI maps this to
// exit code 2, everything else user-facing to exit code 1.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact squared Euclidean length between two lattice nodes. All edge
/// comparisons in the library happen on this integer; square roots are
/// taken only for display.
struct SquaredLength {
  std::int64_t value = 0;
  friend constexpr auto operator<=>(SquaredLength, SquaredLength) = default;
};

/// Decimal length for reports. Never used in comparisons.
double edge_length(SquaredLength sq);

/// Grid dimensions: m rows by n columns, with the derived half-spans
/// k = floor(n/2) and t = floor(m/2) recomputed on access.
class GridDims {
 public:
  GridDims(int rows, int cols);

  int m() const { return rows_; }
  int n() const { return cols_; }
  int k() const { return cols_ / 2; }
  int t() const { return rows_ / 2; }
  std::int64_t node_count() const {
    return static_cast<std::int64_t>(rows_) * cols_;
  }

  /// True when rows exceed columns; the tour construction and the bound
  /// formulas assume m <= n and transpose such grids first.
  bool needs_transpose() const { return rows_ > cols_; }
  GridDims transposed() const { return GridDims(cols_, rows_); }
  GridDims canonical() const { return needs_transpose() ? transposed() : *this; }

  friend bool operator==(const GridDims&, const GridDims&) = default;

 private:
  int rows_;
  int cols_;
};

/// One lattice node. 1-indexed: row in [1,m], col in [1,n].
struct GridPoint {
  int row = 0;
  int col = 0;
  friend constexpr auto operator<=>(GridPoint, GridPoint) = default;
};

std::string to_string(GridPoint p);  // "(row,col)"

bool contains(const GridDims& dims, GridPoint p);

/// Row-major node index in [0, m*n).
std::int64_t node_index(const GridDims& dims, GridPoint p);
GridPoint point_at(const GridDims& dims, std::int64_t index);

/// A visiting order over all m*n nodes, interpreted cyclically (the last
/// node connects back to the first).
struct Tour {
  GridDims dims;
  std::vector<GridPoint> order;
};

SquaredLength sq_dist(GridPoint a, GridPoint b);

enum class TourDefect { none, wrong_length, out_of_range, duplicate, missing };

struct ValidationResult {
  TourDefect defect = TourDefect::none;
  std::string message;  // e.g. "duplicate (2,2)"; empty when ok
  bool ok() const { return defect == TourDefect::none; }
};

/// Checks that the order is a permutation of all grid nodes. Reports the
/// first violation instead of throwing.
ValidationResult validate_tour(const Tour& tour);

/// Smallest squared edge length over all cyclic consecutive pairs.
/// Throws std::invalid_argument when the order cannot form a cycle.
SquaredLength min_edge(const Tour& tour);

/// Swaps rows and columns of every node (grid reflected along the diagonal).
Tour transposed(const Tour& tour);

}  // namespace mstsp
