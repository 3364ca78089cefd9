#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "tamper.hpp"
#include "tuniform/disc.hpp"
#include "tuniform/disc_io.hpp"
#include "tuniform/error.hpp"
#include "tuniform/mesh_index.hpp"

using namespace tuniform;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::invalid_argument;
}

}  // namespace

TEST_CASE("wheel") {
  const auto disc = build_disc(7, 1);
  CHECK(disc.vertices().size() == 8);
  CHECK(disc.edges().size() == 14);
  CHECK(disc.triangles().size() == 7);
  CHECK(disc.layer(1).size() == 7);
  for (VertexId v : disc.layer(1)) CHECK(disc.vertices()[v].tag == VertexTag::z);
  CHECK(disc.vertices()[disc.layer(0)[0]].tag == VertexTag::center);
  CHECK(validate_disc(disc).empty());
}

TEST_CASE("layer sizes follow the Y/Z bookkeeping") {
  // |V_n| = (t-5) Y + (t-4) Z with Y_n = |V_{n-1}| ... spelled out for t = 7.
  const auto sizes = projected_layer_sizes(7, 6);
  const std::vector<std::uint64_t> expected{1, 7, 21, 56, 147, 385, 1008};
  CHECK(sizes == expected);
  const auto disc = build_disc(7, 6);
  for (int n = 0; n <= 6; ++n) CHECK(disc.layer(n).size() == expected[n]);
  CHECK(disc.layer(7).empty());
}

TEST_CASE("canonical discs are sound") {
  for (int t = 6; t <= 12; ++t) {
    const int r = std::min(5, max_feasible_radius(t, BuildLimits{}, 5));
    const auto disc = build_disc(t, r);
    const auto violations = validate_disc(disc);
    CHECK_MESSAGE(violations.empty(), "t = " << t << ": " << (violations.empty() ? "" : violations[0].witness));
    const auto pick = pick_area(disc);
    CHECK(pick.area == 2 * pick.interior + pick.boundary - 2);
  }
  CHECK(validate_disc(build_disc(4, 1)).empty());
  CHECK(validate_disc(build_disc(5, 2)).empty());
  CHECK(validate_disc(build_disc(5, 0)).empty());
}

TEST_CASE("t = 6 disc is the hexagonal patch of the triangular lattice") {
  const auto disc = build_disc(6, 5);
  const MeshIndex index(disc);
  for (int n = 1; n <= 5; ++n) {
    const auto lattice = oracle::HexLattice::count(n);
    std::int64_t edges = 0, y = 0, z = 0;
    for (const auto& e : disc.edges()) {
      edges += static_cast<int>(disc.vertices()[e.a].layer) == n && static_cast<int>(disc.vertices()[e.b].layer) == n;
    }
    for (VertexId v : disc.layer(n)) (disc.vertices()[v].tag == VertexTag::y ? y : z) += 1;
    CHECK(edges == lattice.sphere_edges);
    CHECK(y == lattice.y);
    CHECK(z == lattice.z);
    CHECK(static_cast<std::int64_t>(disc.layer(n).size()) == lattice.y + lattice.z);
  }
  CHECK(oracle::HexLattice::count(2).y == 6);
  CHECK(oracle::HexLattice::count(2).z == 6);
}

TEST_CASE("interior vertices have degree t") {
  const auto disc = build_disc(9, 4);
  const MeshIndex index(disc);
  for (int n = 0; n < 4; ++n) {
    for (VertexId v : disc.layer(n)) CHECK(index.degree(v) == 9);
  }
  for (VertexId v : disc.layer(1)) {
    const auto nb = index.neighbors(v);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(index.has_edge(v, disc.layer(0)[0]));
  }
  // each interior edge lies on two triangles
  for (const auto& e : disc.edges()) {
    const int outer = std::max(disc.vertices()[e.a].layer, disc.vertices()[e.b].layer);
    const bool boundary = outer == 4 && disc.vertices()[e.a].layer == disc.vertices()[e.b].layer;
    CHECK(index.triangles_with_edge(e.a, e.b).size() == (boundary ? 1u : 2u));
  }
}

TEST_CASE("degenerate and invalid radii") {
  CHECK(code_of([] { build_disc(4, 2); }) == ErrorCode::degenerate_radius);
  CHECK(code_of([] { build_disc(5, 3); }) == ErrorCode::degenerate_radius);
  CHECK(code_of([] { build_disc(3, 1); }) == ErrorCode::invalid_t);
  CHECK(code_of([] { build_disc(7, -1); }) == ErrorCode::invalid_argument);
  BuildLimits small;
  small.max_vertices = 1000;
  CHECK(code_of([&] { build_disc(10, 5, small); }) == ErrorCode::limit_exceeded);
  CHECK(max_feasible_radius(10, small, 20) == 3);
  CHECK(code_of([] { truncate(build_disc(6, 2), 3); }) == ErrorCode::radius_out_of_range);
}

TEST_CASE("truncation keeps the inner layers") {
  const auto disc = build_disc(8, 4);
  const auto inner = truncate(disc, 2);
  const auto direct = build_disc(8, 2);
  CHECK(inner.radius() == 2);
  CHECK(inner.vertices().size() == direct.vertices().size());
  CHECK(std::equal(inner.edges().begin(), inner.edges().end(), direct.edges().begin(), direct.edges().end()));
  CHECK(std::equal(inner.triangles().begin(), inner.triangles().end(), direct.triangles().begin(),
                   direct.triangles().end()));
}

TEST_CASE("construction is deterministic") {
  const auto a = disc_to_json(build_disc(7, 5)).dump();
  const auto b = disc_to_json(build_disc(7, 5)).dump();
  CHECK(a == b);
}

TEST_CASE("JSON round trip") {
  const auto disc = build_disc(7, 3);
  const auto doc = disc_to_json(disc);
  CHECK(doc["t"] == 7);
  CHECK(doc["layers"].size() == 4);
  const auto back = disc_from_json(doc);
  CHECK(disc_to_json(back) == doc);
  CHECK(validate_disc(back).empty());

  auto broken = doc;
  broken["edges"][0] = {0};
  CHECK(code_of([&] { disc_from_json(broken); }) == ErrorCode::invalid_format);
  CHECK(code_of([] { disc_from_json(nlohmann::json::array()); }) == ErrorCode::invalid_format);
}

TEST_CASE("tampering is detected with a witness") {
  const auto disc = build_disc(7, 3);

  SUBCASE("deleted interior edge") {
    const std::size_t i = tamper::interior_edge(disc);
    REQUIRE(i < disc.edges().size());
    const auto bad = tamper::edit(disc, [&](tamper::Parts& p) { p.edges.erase(p.edges.begin() + i); });
    const auto v = validate_disc(bad);
    CHECK(tamper::cites(v, Invariant::interior_degree));
    CHECK(tamper::cites(v, Invariant::triangle_edge_missing));
  }
  SUBCASE("duplicated triangle") {
    const auto bad = tamper::edit(disc, [](tamper::Parts& p) { p.triangles.push_back(p.triangles[3]); });
    CHECK(tamper::cites(validate_disc(bad), Invariant::edge_triangle_multiplicity));
  }
  SUBCASE("duplicated edge") {
    const auto bad = tamper::edit(disc, [](tamper::Parts& p) { p.edges.push_back(p.edges[5]); });
    CHECK(tamper::cites(validate_disc(bad), Invariant::duplicate_edge));
  }
  SUBCASE("removed triangle") {
    const auto bad = tamper::edit(disc, [](tamper::Parts& p) { p.triangles.erase(p.triangles.begin()); });
    const auto v = validate_disc(bad);
    CHECK(tamper::cites(v, Invariant::edge_triangle_multiplicity));
    CHECK(tamper::cites(v, Invariant::euler_characteristic));
  }
  SUBCASE("chord across a layer") {
    const auto l2 = disc.layer(2);
    const auto bad = tamper::edit(disc, [&](tamper::Parts& p) { p.edges.emplace_back(l2[0], l2[l2.size() / 2]); });
    CHECK(!validate_disc(bad).empty());
  }
  SUBCASE("edge skipping a layer") {
    const auto bad = tamper::edit(disc, [&](tamper::Parts& p) { p.edges.emplace_back(disc.layer(0)[0], disc.layer(2)[0]); });
    CHECK(tamper::cites(validate_disc(bad), Invariant::layer_structure));
  }
  SUBCASE("dangling index") {
    const auto bad = tamper::edit(disc, [](tamper::Parts& p) { p.edges.emplace_back(0, 100000); });
    CHECK(tamper::cites(validate_disc(bad), Invariant::vertex_index));
  }
}

TEST_CASE("report cap per invariant") {
  const auto disc = build_disc(8, 3);
  const auto bad = tamper::edit(disc, [](tamper::Parts& p) { p.triangles.clear(); });
  const auto v = validate_disc(bad, 2);
  std::map<Invariant, int> per_kind;
  for (const auto& x : v) ++per_kind[x.invariant];
  for (const auto& [k, n] : per_kind) CHECK(n <= 3);  // capped reports plus at most one summary line
}
