#include "tuniform/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace tuniform {

namespace {

std::string num(double v) {
  if (std::abs(v) < 0.0005) v = 0.0;  // no "-0.000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::vector<Point> concentric_layout(const TriangulatedDisc& disc, const RenderSpec& spec) {
  std::vector<Point> points(disc.vertices().size());
  const double centre = spec.size / 2.0;
  const int radius = disc.radius();
  const double unit = radius > 0 ? (centre - spec.margin) / radius : 0.0;
  constexpr double pi = std::numbers::pi;

  double first_angle = 0.0;  // angle of position 0 in the previous layer
  std::size_t previous_size = 1;
  for (int k = 0; k < disc.layer_count(); ++k) {
    const auto layer = disc.layer(k);
    const std::size_t m = layer.size();
    double offset = 0.0;
    if (k >= 2) offset = first_angle - pi / static_cast<double>(previous_size);
    for (std::size_t p = 0; p < m; ++p) {
      const double angle = offset + 2.0 * pi * static_cast<double>(p) / static_cast<double>(m);
      // SVG y grows downwards; flip so counterclockwise reads as such.
      points[layer[p]] = {centre + k * unit * std::cos(angle), centre - k * unit * std::sin(angle)};
    }
    first_angle = offset;
    previous_size = m;
  }
  return points;
}

std::string render_svg(const TriangulatedDisc& disc, const RenderSpec& spec) {
  const auto points = concentric_layout(disc, spec);
  const auto& vertices = disc.vertices();
  std::string out;
  out.reserve(128 * (disc.triangles().size() + disc.edges().size()) + 512);

  const std::string size = num(spec.size);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + size + "\" height=\"" + size +
         "\" viewBox=\"0 0 " + size + " " + size + "\">\n";
  out += "<title>" + std::to_string(disc.t()) + "-uniform disc, radius " + std::to_string(disc.radius()) +
         "</title>\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"" + spec.background + "\"/>\n";

  out += "<g id=\"triangles\" stroke=\"none\">\n";
  for (const auto& tri : disc.triangles()) {
    std::uint32_t outer = 0;
    for (VertexId v : tri.v) outer = std::max(outer, vertices[v].layer);
    out += "<polygon points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      const Point& p = points[tri.v[i]];
      if (i) out += ' ';
      out += num(p.x) + "," + num(p.y);
    }
    out += "\" fill=\"" + (outer % 2 == 0 ? spec.even_fill : spec.odd_fill) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g id=\"edges\" stroke=\"" + spec.stroke + "\" stroke-width=\"" + num(spec.stroke_width) + "\">\n";
  for (const auto& e : disc.edges()) {
    const Point& a = points[e.a];
    const Point& b = points[e.b];
    out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\"/>\n";
  }
  out += "</g>\n";

  if (spec.vertex_radius > 0.0) {
    out += "<g id=\"vertices\" fill=\"" + spec.stroke + "\">\n";
    for (const Point& p : points) {
      out += "<circle cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) + "\" r=\"" + num(spec.vertex_radius) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace tuniform
