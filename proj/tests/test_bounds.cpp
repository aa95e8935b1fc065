#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mstsp/bounds.hpp"

using namespace mstsp;
using doctest::Approx;

TEST_CASE("lower bound formula") {
  CHECK(lower_bound(GridDims(3, 4)).value == 2);
  CHECK(lower_bound(GridDims(5, 7)).value == 13);
  CHECK(lower_bound(GridDims(2, 8)).value == 10);
  CHECK(lower_bound(GridDims(1, 5)).value == 4);
  CHECK(lower_bound(GridDims(1, 8)).value == 9);
  CHECK(lower_bound(GridDims(2, 2)).value == 1);
  CHECK_THROWS_AS(lower_bound(GridDims(1, 2)), std::invalid_argument);
}

TEST_CASE("upper bound formula") {
  CHECK(upper_bound(GridDims(3, 4)).value == 5);
  CHECK(upper_bound(GridDims(4, 6)).value == 10);
  CHECK(upper_bound(GridDims(2, 6)).value == 5);
  CHECK(upper_bound(GridDims(1, 8)).value == 9);
  CHECK(upper_bound(GridDims(5, 5)).value == 8);
}

TEST_CASE("alpha") {
  CHECK(approx_alpha(GridDims(3, 4)) == Approx(std::sqrt(10.0) / 5.0).epsilon(1e-13));
  CHECK(approx_alpha(GridDims(3, 5)) == 1.0);
  CHECK(approx_alpha(GridDims(9, 13)) == 1.0);
  CHECK(approx_alpha(GridDims(4, 6)) == Approx(std::sqrt(0.8)).epsilon(1e-13));
}

TEST_CASE("gap") {
  CHECK(gap(GridDims(3, 4)) ==
        Approx(std::sqrt(5.0) - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(gap(GridDims(4, 4)) == 0.0);
  CHECK(gap(GridDims(2, 6)) == 0.0);
}

TEST_CASE("optimality classifier") {
  CHECK(classify_optimal(GridDims(3, 5)));
  CHECK(classify_optimal(GridDims(4, 4)));
  CHECK_FALSE(classify_optimal(GridDims(3, 4)));
  CHECK(classify_optimal(GridDims(2, 100)));
  CHECK(classify_optimal(GridDims(1, 6)));
  CHECK(optimality_reason(GridDims(4, 5)) == std::optional<std::string>("n odd"));
  CHECK(optimality_reason(GridDims(6, 6)) == std::optional<std::string>("square grid"));
  CHECK_FALSE(optimality_reason(GridDims(4, 6)).has_value());
  // Orientation does not matter.
  CHECK(classify_optimal(GridDims(5, 4)));
}

TEST_CASE("bounds bracket correctly across a sweep") {
  for (int m = 1; m <= 40; ++m) {
    for (int n = std::max(m, 3); n <= 40; ++n) {
      const GridDims dims(m, n);
      const auto lower = lower_bound(dims);
      const auto upper = upper_bound(dims);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(lower <= upper);
      CHECK((lower == upper) == classify_optimal(dims));
      if (n % 2 == 0) CHECK(gap_below_one(lower, upper));
      CHECK(gap(dims) < 1.0);
      CHECK(approx_alpha(dims) >= std::sqrt(10.0) / 5.0 - 1e-12);
      CHECK(std::abs(alpha_closed_form(dims) - approx_alpha(dims)) <= 1e-12);
    }
  }
}

TEST_CASE("exact gap-below-one predicate") {
  CHECK(gap_below_one(SquaredLength{2}, SquaredLength{5}));
  CHECK(gap_below_one(SquaredLength{5}, SquaredLength{5}));
  CHECK(gap_below_one(SquaredLength{8}, SquaredLength{10}));
  // sqrt(9) - sqrt(4) = 1 exactly: not below one.
  CHECK_FALSE(gap_below_one(SquaredLength{4}, SquaredLength{9}));
  CHECK_FALSE(gap_below_one(SquaredLength{4}, SquaredLength{16}));
}

TEST_CASE("alpha approaches one along the adjacent families") {
  double prev = 0.0;
  for (int n = 4; n <= 60; n += 2) {
    const double a = approx_alpha(GridDims(n - 1, n));
    CHECK(a > prev);
    prev = a;
  }
  prev = 0.0;
  for (int m = 4; m <= 58; m += 2) {
    const double a = approx_alpha(GridDims(m, m + 2));
    CHECK(a > prev);
    prev = a;
  }
  // Fixed t, growing k.
  prev = 0.0;
  for (int n = 4; n <= 80; n += 2) {
    const double a = approx_alpha(GridDims(3, n));
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("bounds report carries canonical dims") {
  const BoundsReport r = bounds_report(GridDims(6, 4));
  CHECK(r.dims == GridDims(4, 6));
  CHECK(r.lower_sq.value == 8);
  CHECK(r.upper_sq.value == 10);
  CHECK_FALSE(r.optimal);
}
