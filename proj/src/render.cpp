#include "mstsp/render.hpp"

#include <fstream>

namespace mstsp {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::string render_svg(const Tour& tour, const RenderSpec& spec) {
  if (spec.cell_px <= 0 || spec.margin_px < 0) {
    throw std::invalid_argument("cell size must be positive");
  }
  const ValidationResult check = validate_tour(tour);
  if (!check.ok()) {
    throw std::invalid_argument("cannot render invalid tour: " + check.message);
  }
  const SquaredLength low = min_edge(tour);
  const double cell = spec.cell_px;
  const double margin = spec.margin_px;
  const auto x = [&](GridPoint p) { return margin + (p.col - 1) * cell; };
  const auto y = [&](GridPoint p) { return margin + (p.row - 1) * cell; };
  const double width = 2 * margin + (tour.dims.n() - 1) * cell;
  const double height = 2 * margin + (tour.dims.m() - 1) * cell;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " +
         num(width) + " " + num(height) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const std::size_t count = tour.order.size();
  // Ordinary edges first so the highlighted minimum edges stay on top.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < count; ++i) {
      const GridPoint a = tour.order[i];
      const GridPoint b = tour.order[(i + 1) % count];
      const bool is_min = sq_dist(a, b) == low;
      if (is_min != (pass == 1)) continue;
      svg += "  <line class=\"" + std::string(is_min ? "min" : "edge") + "\" x1=\"" +
             num(x(a)) + "\" y1=\"" + num(y(a)) + "\" x2=\"" + num(x(b)) +
             "\" y2=\"" + num(y(b)) + "\" stroke=\"" +
             (is_min ? "#d62728" : "#9aa7b1") + "\" stroke-width=\"" +
             (is_min ? "2.5" : "1.2") + "\"/>\n";
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    const GridPoint p = tour.order[i];
    svg += "  <circle cx=\"" + num(x(p)) + "\" cy=\"" + num(y(p)) +
           "\" r=\"3.2\" fill=\"#1f3552\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void render_svg_file(const Tour& tour, const std::string& path, const RenderSpec& spec) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << render_svg(tour, spec);
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace mstsp
