#include "mstsp/grid.hpp"

#include <cmath>
#include <vector>

namespace mstsp {

double edge_length(SquaredLength sq) {
  return std::sqrt(static_cast<double>(sq.value));
}

GridDims::GridDims(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("grid dimensions must be positive, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
  }
}

std::string to_string(GridPoint p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

bool contains(const GridDims& dims, GridPoint p) {
  return p.row >= 1 && p.row <= dims.m() && p.col >= 1 && p.col <= dims.n();
}

std::int64_t node_index(const GridDims& dims, GridPoint p) {
  return static_cast<std::int64_t>(p.row - 1) * dims.n() + (p.col - 1);
}

GridPoint point_at(const GridDims& dims, std::int64_t index) {
  return GridPoint{static_cast<int>(index / dims.n()) + 1,
                   static_cast<int>(index % dims.n()) + 1};
}

SquaredLength sq_dist(GridPoint a, GridPoint b) {
  const std::int64_t dr = a.row - b.row;
  const std::int64_t dc = a.col - b.col;
  return SquaredLength{dr * dr + dc * dc};
}

ValidationResult validate_tour(const Tour& tour) {
  const std::int64_t expected = tour.dims.node_count();
  if (static_cast<std::int64_t>(tour.order.size()) != expected) {
    return {TourDefect::wrong_length,
            "wrong length (" + std::to_string(tour.order.size()) + " != " +
                std::to_string(expected) + ")"};
  }
  std::vector<char> seen(static_cast<std::size_t>(expected), 0);
  for (const GridPoint& p : tour.order) {
    if (!contains(tour.dims, p)) {
      return {TourDefect::out_of_range, "out-of-range " + to_string(p)};
    }
    char& mark = seen[static_cast<std::size_t>(node_index(tour.dims, p))];
    if (mark) {
      return {TourDefect::duplicate, "duplicate " + to_string(p)};
    }
    mark = 1;
  }
  for (std::int64_t i = 0; i < expected; ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      return {TourDefect::missing, "missing " + to_string(point_at(tour.dims, i))};
    }
  }
  return {};
}

SquaredLength min_edge(const Tour& tour) {
  const std::size_t count = tour.order.size();
  if (count < 3 || static_cast<std::int64_t>(count) != tour.dims.node_count()) {
    throw std::invalid_argument("min_edge needs a full cyclic order, got " +
                                std::to_string(count) + " of " +
                                std::to_string(tour.dims.node_count()) + " nodes");
  }
  SquaredLength best = sq_dist(tour.order.back(), tour.order.front());
  for (std::size_t i = 0; i + 1 < count; ++i) {
    const SquaredLength d = sq_dist(tour.order[i], tour.order[i + 1]);
    if (d < best) best = d;
  }
  return best;
}

Tour transposed(const Tour& tour) {
  Tour out{tour.dims.transposed(), {}};
  out.order.reserve(tour.order.size());
  for (const GridPoint& p : tour.order) {
    out.order.push_back(GridPoint{p.col, p.row});
  }
  return out;
}

}  // namespace mstsp
