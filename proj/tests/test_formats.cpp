#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mstsp/bench.hpp"
#include "mstsp/bounds.hpp"
#include "mstsp/render.hpp"
#include "mstsp/report.hpp"
#include "mstsp/tour_io.hpp"
#include "mstsp/weave.hpp"

using namespace mstsp;

TEST_CASE("tour text is bit-exact") {
  const std::string expected =
      "mstsp-tour 1\n"
      "2 3\n"
      "1 3\n"
      "2 2\n"
      "1 1\n"
      "2 3\n"
      "1 2\n"
      "2 1\n";
  CHECK(write_tour(build_tour(GridDims(2, 3))) == expected);
}

TEST_CASE("tour text round-trips") {
  const Tour tour = build_tour(GridDims(5, 7));
  std::istringstream in(write_tour(tour));
  const Tour back = read_tour(in);
  CHECK(back.dims == tour.dims);
  CHECK(back.order == tour.order);
}

TEST_CASE("reader skips comment lines") {
  std::istringstream in(
      "mstsp-tour 1\n"
      "2 3\n"
      "# oracle witness\n"
      "1 3\n2 2\n1 1\n2 3\n# midway note\n1 2\n2 1\n");
  const Tour tour = read_tour(in);
  CHECK(tour.order.size() == 6);
  CHECK(validate_tour(tour).ok());
}

TEST_CASE("reader rejects malformed input") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_tour(in);
  };
  CHECK_THROWS_AS(parse("wrong-header\n2 3\n"), TourFormatError);
  CHECK_THROWS_AS(parse("mstsp-tour 1\n2\n"), TourFormatError);
  CHECK_THROWS_AS(parse("mstsp-tour 1\n2 3\n1 3\n"), TourFormatError);
  CHECK_THROWS_AS(parse("mstsp-tour 1\n2 3\n1 3\n2 2\n1 1\n2 3\n1 2\n2 1\nextra\n"),
                  TourFormatError);
  CHECK_THROWS_AS(parse("mstsp-tour 1\n2 3\n1 x\n2 2\n1 1\n2 3\n1 2\n2 1\n"),
                  TourFormatError);
}

TEST_CASE("text and structured reports carry identical values") {
  for (const GridDims dims : {GridDims(3, 4), GridDims(4, 6), GridDims(5, 5)}) {
    const BoundsReport report = bounds_report(dims);
    const std::string text = bounds_text(report);
    const nlohmann::ordered_json record = bounds_json(report);

    const auto text_value = [&](const std::string& key) {
      const std::size_t at = text.find(key + ": ");
      REQUIRE(at != std::string::npos);
      return std::strtod(text.c_str() + at + key.size() + 2, nullptr);
    };
    CHECK(text_value("gap") == record["gap"].get<double>());
    CHECK(text_value("alpha") == record["alpha"].get<double>());
    CHECK(record["lower_sq"].get<std::int64_t>() == report.lower_sq.value);
    CHECK(record["upper_sq"].get<std::int64_t>() == report.upper_sq.value);
    CHECK(record["optimal"].get<bool>() == report.optimal);
    CHECK(record["m"] == report.dims.m());
    CHECK(record["k"] == report.dims.k());
  }
}

TEST_CASE("tour summary states optimality the way the classifier does") {
  const TourSummary opt = summarize_tour(build_tour(GridDims(4, 5)));
  CHECK(tour_summary_text(opt).find("optimal (n odd)") != std::string::npos);
  const TourSummary approx = summarize_tour(build_tour(GridDims(3, 4)));
  const std::string line = tour_summary_text(approx);
  CHECK(line.find("approximation") != std::string::npos);
  CHECK(line.find("0.632455532034") != std::string::npos);
  CHECK(tour_summary_json(approx)["min_edge_sq"] == 2);
}

TEST_CASE("svg rendering highlights exactly the minimum edges") {
  const Tour tour = build_tour(GridDims(2, 3));
  const std::string svg = render_svg(tour);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"") !=
        std::string::npos);
  std::size_t highlighted = 0;
  for (std::size_t at = svg.find("class=\"min\""); at != std::string::npos;
       at = svg.find("class=\"min\"", at + 1)) {
    ++highlighted;
  }
  CHECK(highlighted == 4);  // four of the six edges realize the minimum
  std::size_t circles = 0;
  for (std::size_t at = svg.find("<circle"); at != std::string::npos;
       at = svg.find("<circle", at + 1)) {
    ++circles;
  }
  CHECK(circles == 6);
  CHECK_THROWS_AS(render_svg(tour, RenderSpec{0, 10}), std::invalid_argument);
}

TEST_CASE("benchmark smoke") {
  const auto rows = run_benchmark({GridDims(20, 20), GridDims(40, 40)}, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].nodes == 400);
  CHECK(rows[0].seconds >= 0.0);
  CHECK(rows[1].ns_per_node > 0.0);
}
