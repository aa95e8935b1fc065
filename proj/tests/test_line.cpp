#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdlib>
#include <set>

#include "doctest.h"
#include "mstsp/grid.hpp"
#include "mstsp/line.hpp"
#include "mstsp/oracle.hpp"
#include "mstsp/weave.hpp"

using namespace mstsp;

namespace {

std::vector<int> cyclic_gaps(const std::vector<int>& order) {
  std::vector<int> gaps;
  gaps.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    gaps.push_back(std::abs(order[(i + 1) % order.size()] - order[i]));
  }
  return gaps;
}

// The two cyclic gaps incident to the point with value `col`.
std::set<int> incident_gaps(const std::vector<int>& order, int col) {
  const auto it = std::find(order.begin(), order.end(), col);
  REQUIRE(it != order.end());
  const std::size_t i = static_cast<std::size_t>(it - order.begin());
  const std::size_t n = order.size();
  return {std::abs(order[(i + 1) % n] - col), std::abs(order[(i + n - 1) % n] - col)};
}

}  // namespace

TEST_CASE("line_odd produces the interleaved order") {
  CHECK(line_odd(5).order == std::vector<int>{1, 4, 2, 5, 3});
  CHECK(line_odd(3).order == std::vector<int>{1, 3, 2});
  CHECK(line_odd(7).order == std::vector<int>{1, 5, 2, 6, 3, 7, 4});
  CHECK_THROWS_AS(line_odd(4), std::invalid_argument);
  CHECK_THROWS_AS(line_odd(1), std::invalid_argument);
}

TEST_CASE("line_even produces the parity-dependent order") {
  CHECK(line_even(6).order == std::vector<int>{1, 5, 3, 6, 2, 4});
  CHECK(line_even(8).order == std::vector<int>{1, 6, 3, 8, 4, 7, 2, 5});
  CHECK(line_even(4).order == std::vector<int>{1, 4, 2, 3});
  CHECK(cyclic_gaps(line_even(4).order) == std::vector<int>{3, 2, 1, 2});
  CHECK_THROWS_AS(line_even(5), std::invalid_argument);
  CHECK_THROWS_AS(line_even(2), std::invalid_argument);
}

TEST_CASE("line_next case table values") {
  CHECK(line_next(7, 2) == 6);
  CHECK(line_next(8, 8) == 4);
  CHECK(line_next(6, 3) == 6);
  CHECK_THROWS_AS(line_next(6, 0), std::invalid_argument);
  CHECK_THROWS_AS(line_next(6, 7), std::invalid_argument);
}

TEST_CASE("line_next visits every column before returning") {
  for (int n = 3; n <= 200; ++n) {
    int col = 1;
    std::set<int> seen;
    for (int step = 0; step < n; ++step) {
      CHECK(seen.insert(col).second);
      col = line_next(n, col);
    }
    CHECK(col == 1);
    CHECK(static_cast<int>(seen.size()) == n);
  }
}

TEST_CASE("line orders and line_next agree pointwise") {
  for (int n = 3; n <= 200; ++n) {
    const LineOrder line = line_order(n);
    REQUIRE(static_cast<int>(line.order.size()) == n);
    for (std::size_t i = 0; i < line.order.size(); ++i) {
      CHECK(line_next(n, line.order[i]) == line.order[(i + 1) % line.order.size()]);
    }
  }
}

TEST_CASE("cyclic gap values follow the max-min pattern") {
  for (int n = 3; n <= 120; ++n) {
    const int k = n / 2;
    const std::vector<int> gaps = cyclic_gaps(line_order(n).order);
    const int smallest = *std::min_element(gaps.begin(), gaps.end());
    if (n % 2 != 0) {
      for (const int g : gaps) CHECK((g == k || g == k + 1));
      CHECK(smallest == k);
    } else {
      for (const int g : gaps) CHECK((g == k - 1 || g == k || g == k + 1));
      CHECK(smallest == k - 1);
      const auto& order = line_order(n).order;
      CHECK(incident_gaps(order, 1) == std::set<int>{k, k + 1});
      CHECK(incident_gaps(order, n) == std::set<int>{k, k + 1});
      CHECK(incident_gaps(order, k) == std::set<int>{k - 1, k});
      CHECK(incident_gaps(order, k + 1) == std::set<int>{k - 1, k});
    }
  }
}

TEST_CASE("line tours are optimal at desk scale") {
  for (int n = 3; n <= 10; ++n) {
    const GridDims dims(1, n);
    const int k = n / 2;
    const std::int64_t expected =
        n % 2 != 0 ? static_cast<std::int64_t>(k) * k
                   : static_cast<std::int64_t>(k - 1) * (k - 1);
    CHECK(min_edge(build_tour(dims)).value == expected);
    CHECK(solve_exact(dims).opt_sq.value == expected);
  }
}
