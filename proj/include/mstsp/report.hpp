#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "mstsp/bounds.hpp"
#include "mstsp/grid.hpp"

namespace mstsp {

/// Rounds to 12 significant digits, the precision of every real value the
/// tool prints. Text and structured output go through the same rounding
/// so they carry identical values.
double sig12(double v);

std::string format_real(double v);                 // %.12g
std::string format_sqrt(SquaredLength sq);         // "sq=8 (sqrt = 2.82842712475)"

std::string bounds_text(const BoundsReport& r);
nlohmann::ordered_json bounds_json(const BoundsReport& r);

struct TourSummary {
  GridDims dims;
  SquaredLength min_sq;
  bool optimal = false;
  std::optional<std::string> reason;
  double alpha = 1.0;
};

TourSummary summarize_tour(const Tour& tour);
std::string tour_summary_text(const TourSummary& s);
nlohmann::ordered_json tour_summary_json(const TourSummary& s);

}  // namespace mstsp
