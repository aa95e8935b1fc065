#include "mstsp/weave.hpp"

#include <string>

#include "mstsp/line.hpp"

namespace mstsp {

namespace {

void require_canonical(const GridDims& dims, const char* who) {
  if (dims.needs_transpose()) {
    throw std::invalid_argument(std::string(who) + " expects m <= n, got " +
                                std::to_string(dims.m()) + "x" +
                                std::to_string(dims.n()));
  }
}

void require_inside(const GridDims& dims, int i, int j) {
  if (!contains(dims, GridPoint{i, j})) {
    throw std::invalid_argument("node (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside " +
                                std::to_string(dims.m()) + "x" +
                                std::to_string(dims.n()) + " grid");
  }
}

// Successor row for even m. Rows pair up as (i, i+t); for even n the pair
// is switched after every full column cycle, for odd n only once the pair
// is exhausted. Column 1 is where every switch happens.
std::optional<int> next_row_even_m(const GridDims& dims, int i, int j) {
  const int m = dims.m();
  const int t = dims.t();
  if (dims.n() % 2 == 0) {
    if (j != 1) return i <= t ? i + t : i - t;
    if (i < t) return i + t + 1;
    if (i == m - t) return std::nullopt;
    return i - (t - 1);  // t < i < m, or i == m
  }
  if (i <= t) return i + t;
  if (j != 1) return i - t;
  if (i == m) return std::nullopt;
  return i - (t - 1);  // t < i < m
}

// Successor row for m = 3: the whole grid is the triple (1, 2, 3) and the
// walk stops as soon as the triple is finished. When 3 divides n the row
// phase is re-seeded at column 1 so the three column cycles stay disjoint.
std::optional<int> next_row_three(const GridDims& dims, int i, int j) {
  if (j != 1) return i % 3 + 1;
  if (dims.n() % 3 != 0) {
    if (i == 1) return 2;
    if (i == 2) return 3;
    return std::nullopt;  // (3,1) is the last triple node
  }
  if (i == 1) return 3;
  if (i == 3) return 2;
  return std::nullopt;  // (2,1) is the last triple node
}

// Successor row for odd m >= 5: first the triple (1, t+1, m), cycling its
// rows once per column step, then the pairs (2, t+2) .. (t, 2t) exactly as
// for even m.
std::optional<int> next_row_odd_m(const GridDims& dims, int i, int j) {
  const int m = dims.m();
  const int t = dims.t();
  const bool n_even = dims.n() % 2 == 0;
  if (dims.n() % 3 != 0) {
    if (j != 1) {
      if (i <= t + 1) return i + t;
      if (i < m) return i - t;
      return 1;
    }
    if (i == 1 || i == t + 1) return i + t;
    if (!n_even && i <= t) return i + t;
    if (n_even && i < t) return i + t + 1;
    if (i > t + 1 && i < m - 1) return i - (t - 1);
    if (n_even && i == m - 1) return i - (t - 2);
    if (i == m) return 2;
    if (!n_even && i == m - 1) return std::nullopt;
    if (n_even && i == t) return std::nullopt;
  } else {
    if (j != 1) {
      if (i <= t + 1) return i + t;
      if (i < m) return i - t;
      return 1;
    }
    if (i == 1) return m;
    if (i == m) return t + 1;
    if (!n_even && i <= t) return i + t;
    if (n_even && i < t) return i + t + 1;
    if (i >= t + 1 && i < m - 1) return i - (t - 1);
    if (n_even && i == m - 1) return i - (t - 2);
    if (!n_even && i == m - 1) return std::nullopt;
    if (n_even && i == t) return std::nullopt;
  }
  throw InternalError("no successor row for (" + std::to_string(i) + "," +
                      std::to_string(j) + ") on " + std::to_string(m) + "x" +
                      std::to_string(dims.n()));
}

}  // namespace

WeaveCase classify_case(const GridDims& dims) {
  const GridDims c = dims.canonical();
  WeaveCase wc;
  wc.cols_multiple_of_3 = c.n() % 3 == 0;
  wc.three_rows = c.m() == 3;
  if (c.n() <= 2) {
    wc.kind = WeaveCase::Kind::tiny;
  } else if (c.m() == 1) {
    wc.kind = WeaveCase::Kind::line;
  } else if (c.m() % 2 == 0) {
    wc.kind = c.n() % 2 != 0 ? WeaveCase::Kind::even_rows_odd_cols
                             : WeaveCase::Kind::even_rows_even_cols;
  } else {
    wc.kind = c.n() % 2 != 0 ? WeaveCase::Kind::odd_rows_odd_cols
                             : WeaveCase::Kind::odd_rows_even_cols;
  }
  return wc;
}

std::string case_name(const WeaveCase& c) {
  std::string name;
  switch (c.kind) {
    case WeaveCase::Kind::tiny: name = "tiny"; break;
    case WeaveCase::Kind::line: name = "single row"; break;
    case WeaveCase::Kind::even_rows_odd_cols: name = "m even, n odd"; break;
    case WeaveCase::Kind::even_rows_even_cols: name = "m even, n even"; break;
    case WeaveCase::Kind::odd_rows_odd_cols: name = "m odd, n odd"; break;
    case WeaveCase::Kind::odd_rows_even_cols: name = "m odd, n even"; break;
  }
  if (c.three_rows) name += ", m=3";
  if (c.cols_multiple_of_3) name += ", 3|n";
  return name;
}

int next_col(const GridDims& dims, int i, int j) {
  require_canonical(dims, "next_col");
  require_inside(dims, i, j);
  return line_next(dims.n(), j);
}

std::optional<int> next_row(const GridDims& dims, int i, int j) {
  require_canonical(dims, "next_row");
  require_inside(dims, i, j);
  if (dims.m() < 2 || dims.n() < 3) {
    throw std::invalid_argument("next_row needs m >= 2 and n >= 3, got " +
                                std::to_string(dims.m()) + "x" +
                                std::to_string(dims.n()));
  }
  if (dims.m() % 2 == 0) return next_row_even_m(dims, i, j);
  if (dims.m() == 3) return next_row_three(dims, i, j);
  return next_row_odd_m(dims, i, j);
}

std::optional<GridPoint> successor(const GridDims& dims, GridPoint p) {
  require_canonical(dims, "successor");
  require_inside(dims, p.row, p.col);
  if (dims.m() == 1) {
    if (dims.n() < 3) {
      throw std::invalid_argument("no successor order on fewer than 3 nodes");
    }
    // The line tour ends at column k+1, whose cyclic successor is column 1.
    if (p.col == dims.k() + 1) return std::nullopt;
    return GridPoint{1, line_next(dims.n(), p.col)};
  }
  const auto row = next_row(dims, p.row, p.col);
  if (!row) return std::nullopt;
  return GridPoint{*row, next_col(dims, p.row, p.col)};
}

GridPoint start_node(const GridDims& dims) {
  require_canonical(dims, "start_node");
  if (dims.m() == 1) return GridPoint{1, 1};
  return GridPoint{1, dims.k() + 2};
}

Tour build_tour(const GridDims& dims) {
  const GridDims canon = dims.canonical();
  if (canon.node_count() < 3) {
    throw std::invalid_argument("no closed tour on fewer than 3 nodes (" +
                                std::to_string(dims.m()) + "x" +
                                std::to_string(dims.n()) + ")");
  }
  Tour tour{canon, {}};
  if (canon.n() == 2) {
    // 2x2: below the reach of the column order (k+2 > n); fixed optimal 4-cycle.
    tour.order = {{1, 1}, {2, 2}, {1, 2}, {2, 1}};
  } else {
    tour.order.reserve(static_cast<std::size_t>(canon.node_count()));
    GridPoint p = start_node(canon);
    while (true) {
      tour.order.push_back(p);
      const auto next = successor(canon, p);
      if (!next) break;
      if (static_cast<std::int64_t>(tour.order.size()) >= canon.node_count()) {
        throw InternalError("successor walk did not terminate after " +
                            std::to_string(canon.node_count()) + " nodes (case " +
                            case_name(classify_case(canon)) + ")");
      }
      p = *next;
    }
  }
  const ValidationResult check = validate_tour(tour);
  if (!check.ok()) {
    throw InternalError("successor walk is not a single Hamiltonian cycle: " +
                        check.message + " (case " +
                        case_name(classify_case(canon)) + ")");
  }
  return dims.needs_transpose() ? transposed(tour) : tour;
}

}  // namespace mstsp
