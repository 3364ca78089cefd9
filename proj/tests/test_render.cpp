#include <doctest.h>

#include <cmath>

#include "tuniform/render.hpp"

using namespace tuniform;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("every edge and triangle is drawn") {
  const auto disc = build_disc(7, 5);
  const auto svg = render_svg(disc);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<polygon ") == disc.triangles().size());
  CHECK(count(svg, "<line ") == disc.edges().size());
  CHECK(count(svg, "<circle ") == disc.vertices().size());
  CHECK(disc.layer(5).size() == 7 * 55);
}

TEST_CASE("byte-identical output") {
  const auto disc = build_disc(6, 4);
  CHECK(render_svg(disc) == render_svg(build_disc(6, 4)));
  RenderSpec spec;
  spec.vertex_radius = 0;
  CHECK(count(render_svg(disc, spec), "<circle ") == 0);
}

TEST_CASE("layers are concentric") {
  const auto disc = build_disc(8, 3);
  RenderSpec spec;
  const auto pts = concentric_layout(disc, spec);
  const double c = spec.size / 2;
  const double unit = (c - spec.margin) / 3;
  for (int k = 0; k <= 3; ++k) {
    for (VertexId v : disc.layer(k)) CHECK(std::hypot(pts[v].x - c, pts[v].y - c) == doctest::Approx(k * unit));
  }
}
