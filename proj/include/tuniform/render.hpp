#pragma once

#include <string>

#include "tuniform/disc.hpp"

namespace tuniform {

// Concentric layout: layer k on the circle of radius k * unit, positions
// counterclockwise in canonical order.
struct RenderSpec {
  double size = 800.0;  // width and height in px
  double margin = 20.0;
  double stroke_width = 0.6;
  std::string stroke = "#333333";
  std::string even_fill = "#dbe8f6";  // triangles whose outer layer is even
  std::string odd_fill = "#f7e3c4";
  std::string background = "#ffffff";
  double vertex_radius = 1.2;  // 0 disables vertex dots
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

std::vector<Point> concentric_layout(const TriangulatedDisc& disc, const RenderSpec& spec = {});

/// SVG 1.1 document; byte-identical for equal inputs.
std::string render_svg(const TriangulatedDisc& disc, const RenderSpec& spec = {});

}  // namespace tuniform
