#include "mstsp/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace mstsp {

double sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_sqrt(SquaredLength sq) {
  return "sq=" + std::to_string(sq.value) + " (sqrt = " +
         format_real(sig12(edge_length(sq))) + ")";
}

std::string bounds_text(const BoundsReport& r) {
  std::string out;
  out += "grid " + std::to_string(r.dims.m()) + "x" + std::to_string(r.dims.n()) +
         " (k=" + std::to_string(r.dims.k()) + ", t=" + std::to_string(r.dims.t()) +
         ")\n";
  out += "  lower bound: " + format_sqrt(r.lower_sq) + "\n";
  out += "  upper bound: " + format_sqrt(r.upper_sq) + "\n";
  out += std::string("  optimal: ") + (r.optimal ? "yes" : "no") + "\n";
  out += "  gap: " + format_real(sig12(r.gap)) + "\n";
  out += "  alpha: " + format_real(sig12(r.alpha)) + "\n";
  return out;
}

nlohmann::ordered_json bounds_json(const BoundsReport& r) {
  return nlohmann::ordered_json{
      {"m", r.dims.m()},
      {"n", r.dims.n()},
      {"k", r.dims.k()},
      {"t", r.dims.t()},
      {"lower_sq", r.lower_sq.value},
      {"upper_sq", r.upper_sq.value},
      {"lower", sig12(edge_length(r.lower_sq))},
      {"upper", sig12(edge_length(r.upper_sq))},
      {"optimal", r.optimal},
      {"gap", sig12(r.gap)},
      {"alpha", sig12(r.alpha)},
  };
}

TourSummary summarize_tour(const Tour& tour) {
  TourSummary s{tour.dims, min_edge(tour), classify_optimal(tour.dims),
                optimality_reason(tour.dims), approx_alpha(tour.dims)};
  return s;
}

std::string tour_summary_text(const TourSummary& s) {
  std::string out = "tour " + std::to_string(s.dims.m()) + "x" +
                    std::to_string(s.dims.n()) + ": min edge " + format_sqrt(s.min_sq);
  if (s.optimal) {
    out += ", optimal (" + *s.reason + ")";
  } else {
    out += ", approximation (alpha = " + format_real(sig12(s.alpha)) + ")";
  }
  out += "\n";
  return out;
}

nlohmann::ordered_json tour_summary_json(const TourSummary& s) {
  return nlohmann::ordered_json{
      {"m", s.dims.m()},
      {"n", s.dims.n()},
      {"min_edge_sq", s.min_sq.value},
      {"min_edge", sig12(edge_length(s.min_sq))},
      {"optimal", s.optimal},
      {"optimal_reason", s.optimal ? nlohmann::ordered_json(*s.reason)
                                   : nlohmann::ordered_json(nullptr)},
      {"alpha", sig12(s.alpha)},
  };
}

}  // namespace mstsp
