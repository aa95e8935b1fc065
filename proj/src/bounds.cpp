#include "mstsp/bounds.hpp"

#include <cmath>

namespace mstsp {

namespace {

GridDims checked_canonical(const GridDims& dims) {
  const GridDims c = dims.canonical();
  if (c.node_count() < 3) {
    throw std::invalid_argument("bounds are undefined below 3 nodes (" +
                                std::to_string(dims.m()) + "x" +
                                std::to_string(dims.n()) + ")");
  }
  return c;
}

std::int64_t sq(std::int64_t v) { return v * v; }

}  // namespace

SquaredLength lower_bound(const GridDims& dims) {
  const GridDims c = checked_canonical(dims);
  const std::int64_t k = c.k();
  const std::int64_t t = c.t();
  // With t = 0 this degenerates to the single-row values k^2 and (k-1)^2.
  if (c.n() % 2 != 0) return SquaredLength{k * k + t * t};
  return SquaredLength{t * t + sq(k - 1)};
}

SquaredLength upper_bound(const GridDims& dims) {
  const GridDims c = checked_canonical(dims);
  const std::int64_t k = c.k();
  const std::int64_t t = c.t();
  if (c.m() == 1) {
    return SquaredLength{c.n() % 2 != 0 ? k * k : sq(k - 1)};
  }
  if (c.n() % 2 != 0) {
    // Center-to-corner distance; the shortest edge of any tour cannot beat it.
    return SquaredLength{k * k + t * t};
  }
  if (c.m() == 2) {
    // Four central nodes cannot all keep both far corners without closing a
    // subtour, so one strictly shorter edge is forced.
    return SquaredLength{1 + sq(k - 1)};
  }
  if (c.m() % 2 == 0) {
    // The longest center-corner distance occurs only once; the second
    // longest must appear in any tour.
    return SquaredLength{k * k + sq(t - 1)};
  }
  return SquaredLength{t * t + k * k};
}

bool classify_optimal(const GridDims& dims) {
  return optimality_reason(dims).has_value();
}

std::optional<std::string> optimality_reason(const GridDims& dims) {
  const GridDims c = checked_canonical(dims);
  if (c.m() == 1) return "single row";
  if (c.n() % 2 != 0) return "n odd";
  if (c.m() == c.n()) return "square grid";
  if (c.m() == 2) return "two rows";
  return std::nullopt;
}

double approx_alpha(const GridDims& dims) {
  const SquaredLength lower = lower_bound(dims);
  const SquaredLength upper = upper_bound(dims);
  if (lower == upper) return 1.0;
  return std::sqrt(static_cast<double>(lower.value) /
                   static_cast<double>(upper.value));
}

double gap(const GridDims& dims) {
  const SquaredLength lower = lower_bound(dims);
  const SquaredLength upper = upper_bound(dims);
  if (lower == upper) return 0.0;
  return std::sqrt(static_cast<double>(upper.value)) -
         std::sqrt(static_cast<double>(lower.value));
}

bool gap_below_one(SquaredLength lower, SquaredLength upper) {
  // sqrt(u) - sqrt(l) < 1  <=>  u - l - 1 < 2*sqrt(l), exactly on integers.
  const std::int64_t c = upper.value - lower.value - 1;
  if (c < 0) return true;
  return c * c < 4 * lower.value;
}

double alpha_closed_form(const GridDims& dims) {
  const GridDims c = checked_canonical(dims);
  const double k = static_cast<double>(c.k());
  const double t = static_cast<double>(c.t());
  if (c.n() % 2 != 0 || c.m() <= 2) return 1.0;
  if (c.m() % 2 != 0) {
    return std::sqrt(1.0 - (2.0 * k - 1.0) / (t * t + k * k));
  }
  // (k-t)^2 + 2t(k-1) + 1 = k^2 + (t-1)^2, so this equals sqrt(lower/upper).
  const double d = k - t;
  return std::sqrt(1.0 - 2.0 * d / (d * d + 2.0 * t * (k - 1.0) + 1.0));
}

BoundsReport bounds_report(const GridDims& dims) {
  const GridDims c = checked_canonical(dims);
  BoundsReport r{c, lower_bound(c), upper_bound(c), classify_optimal(c),
                 gap(c), approx_alpha(c)};
  return r;
}

}  // namespace mstsp
