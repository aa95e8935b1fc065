#pragma once

#include <optional>
#include <string>

#include "mstsp/grid.hpp"

namespace mstsp {

/// Proven bracket on the best achievable minimum edge of a grid, plus the
/// derived quality numbers. Squared values are exact; gap and alpha are
/// the only real-valued fields.
struct BoundsReport {
  GridDims dims;            // canonical (m <= n)
  SquaredLength lower_sq;   // achieved by the weave tour
  SquaredLength upper_sq;   // best proven upper bound
  bool optimal = false;
  double gap = 0.0;         // sqrt(upper) - sqrt(lower)
  double alpha = 1.0;       // sqrt(lower/upper), in (0,1]
};

/// Squared minimum edge guaranteed by the weave tour:
/// k^2 + t^2 for odd n, t^2 + (k-1)^2 for even n.
SquaredLength lower_bound(const GridDims& dims);

/// Best proven squared upper bound on any tour's minimum edge. Center-to-
/// corner argument for odd n; its even-m refinement k^2 + (t-1)^2; and the
/// two-row refinement 1 + (k-1)^2 for m = 2.
SquaredLength upper_bound(const GridDims& dims);

/// True when the weave tour is provably optimal: odd n, square grids,
/// one or two rows.
bool classify_optimal(const GridDims& dims);

/// Which clause makes the grid optimal, or nullopt when none applies.
std::optional<std::string> optimality_reason(const GridDims& dims);

/// Approximation factor sqrt(lower/upper); exactly 1 when optimal.
double approx_alpha(const GridDims& dims);

/// sqrt(upper) - sqrt(lower); exactly 0 when optimal, always below 1 for
/// even n.
double gap(const GridDims& dims);

/// Exact integer test for sqrt(upper) - sqrt(lower) < 1: no floating
/// point involved.
bool gap_below_one(SquaredLength lower, SquaredLength upper);

/// Case closed form of the approximation factor:
///   sqrt(1 - (2k-1)/(t^2+k^2))                    for even n, odd m >= 3
///   sqrt(1 - 2(k-t)/((k-t)^2 + 2t(k-1) + 1))      for even n, even m >= 4
/// and 1 in the optimal cases. Algebraically equal to approx_alpha.
double alpha_closed_form(const GridDims& dims);

BoundsReport bounds_report(const GridDims& dims);

}  // namespace mstsp
