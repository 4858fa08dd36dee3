#pragma once

#include <string>

#include "mpoly/core.hpp"

namespace mpoly {

// Fixed drawing parameters; every render uses the same record so equal
// inputs produce byte-identical output.
struct RenderStyle {
  double canvas = 640.0;
  double ring_radius = 240.0;
  double node_radius = 18.0;
  double font_size = 16.0;
  double stroke_width = 1.5;
};

// SVG 1.1 diagram of a complete labeling: vertex 1 at twelve o'clock,
// vertices clockwise on the ring, midpoints at the geometric edge midpoints,
// the center node at the origin, all 2n lines drawn, every node a circle
// containing its value.
std::string render_svg(const Labeling& labeling,
                       const RenderStyle& style = {});

}  // namespace mpoly
