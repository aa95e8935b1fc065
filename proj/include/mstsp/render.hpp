#pragma once

#include <string>

#include "mstsp/grid.hpp"

namespace mstsp {

/// Static SVG 1.1 rendering of a tour. Edges achieving the tour's minimum
/// length are highlighted; everything else is drawn in a neutral stroke.
struct RenderSpec {
  int cell_px = 40;
  int margin_px = 24;
};

std::string render_svg(const Tour& tour, const RenderSpec& spec = {});
void render_svg_file(const Tour& tour, const std::string& path,
                     const RenderSpec& spec = {});

}  // namespace mstsp
