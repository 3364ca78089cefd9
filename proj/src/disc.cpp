#include "tuniform/disc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tuniform/error.hpp"
#include "tuniform/mesh_index.hpp"

namespace tuniform {

std::string_view to_string(VertexTag tag) {
  switch (tag) {
    case VertexTag::center: return "center";
    case VertexTag::y: return "Y";
    case VertexTag::z: return "Z";
  }
  return "?";
}

std::string_view to_string(Invariant invariant) {
  switch (invariant) {
    case Invariant::vertex_index: return "vertex_index";
    case Invariant::single_center: return "single_center";
    case Invariant::layer_structure: return "layer_structure";
    case Invariant::interior_degree: return "interior_degree";
    case Invariant::layer_cycle: return "layer_cycle";
    case Invariant::duplicate_edge: return "duplicate_edge";
    case Invariant::triangle_shape: return "triangle_shape";
    case Invariant::triangle_layers: return "triangle_layers";
    case Invariant::triangle_edge_missing: return "triangle_edge_missing";
    case Invariant::edge_triangle_multiplicity: return "edge_triangle_multiplicity";
    case Invariant::euler_characteristic: return "euler_characteristic";
    case Invariant::flagness: return "flagness";
  }
  return "?";
}

Triangle::Triangle(VertexId x, VertexId y, VertexId z) : v{x, y, z} { std::sort(v.begin(), v.end()); }

TriangulatedDisc TriangulatedDisc::assemble(int t, int radius, std::vector<Vertex> vertices,
                                            std::vector<Edge> edges, std::vector<Triangle> triangles) {
  TriangulatedDisc disc;
  disc.t_ = t;
  disc.radius_ = radius;
  disc.vertices_ = std::move(vertices);
  disc.edges_ = std::move(edges);
  disc.triangles_ = std::move(triangles);
  std::sort(disc.edges_.begin(), disc.edges_.end());
  std::sort(disc.triangles_.begin(), disc.triangles_.end());

  std::uint32_t top = 0;
  for (const auto& v : disc.vertices_) top = std::max(top, v.layer);
  disc.layers_.assign(disc.vertices_.empty() ? 0 : top + 1, {});
  for (VertexId id = 0; id < disc.vertices_.size(); ++id) disc.layers_[disc.vertices_[id].layer].push_back(id);
  for (auto& ids : disc.layers_) {
    std::stable_sort(ids.begin(), ids.end(), [&](VertexId a, VertexId b) {
      return disc.vertices_[a].position < disc.vertices_[b].position;
    });
  }
  return disc;
}

std::span<const VertexId> TriangulatedDisc::layer(int n) const {
  if (n < 0 || n >= static_cast<int>(layers_.size())) return {};
  return layers_[static_cast<std::size_t>(n)];
}

std::vector<std::uint64_t> projected_layer_sizes(int t, int radius, const BuildLimits& limits) {
  if (t < 4) throw Error(ErrorCode::invalid_t, "t must be >= 4, got " + std::to_string(t));
  if (radius < 0) throw Error(ErrorCode::invalid_argument, "negative radius");
  if (radius > limits.max_radius) {
    throw Error(ErrorCode::limit_exceeded,
                "radius " + std::to_string(radius) + " exceeds max_radius " + std::to_string(limits.max_radius));
  }
  const auto ut = static_cast<std::uint64_t>(t);
  std::vector<std::uint64_t> sizes{1};
  std::uint64_t total = 1;
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  auto account = [&](std::uint64_t count, int n) {
    total += count;
    if (total > limits.max_vertices) {
      throw Error(ErrorCode::limit_exceeded, "disc t=" + std::to_string(t) + " radius " + std::to_string(n) +
                                                 " needs more than " + std::to_string(limits.max_vertices) +
                                                 " vertices");
    }
    sizes.push_back(count);
  };
  if (radius >= 1) {
    account(ut, 1);
    z = ut;
  }
  for (int n = 2; n <= radius; ++n) {
    // A parent with fewer than two children cannot share distinct children
    // with both cyclic neighbours: the next sphere collapses.
    if ((y > 0 && t - 4 < 2) || (z > 0 && t - 3 < 2)) {
      throw Error(ErrorCode::degenerate_radius, "t=" + std::to_string(t) + " admits no sphere of radius " +
                                                    std::to_string(n) + " in a disc");
    }
    const std::uint64_t parents = sizes.back();
    const std::uint64_t count = (ut - 4) * y + (ut - 3) * z - parents;
    account(count, n);
    y = parents;
    z = count - parents;
  }
  return sizes;
}

int max_feasible_radius(int t, const BuildLimits& limits, int cap) {
  int best = 0;
  for (int r = 1; r <= std::min(cap, limits.max_radius); ++r) {
    try {
      projected_layer_sizes(t, r, limits);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::limit_exceeded || e.code() == ErrorCode::degenerate_radius) break;
      throw;
    }
    best = r;
  }
  return best;
}

TriangulatedDisc build_disc(int t, int radius, const BuildLimits& limits) {
  const auto sizes = projected_layer_sizes(t, radius, limits);
  const std::uint64_t total = std::accumulate(sizes.begin(), sizes.end(), std::uint64_t{0});

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  vertices.reserve(total);
  edges.reserve(3 * total);
  triangles.reserve(2 * total);

  vertices.push_back({0, 0, VertexTag::center});
  if (radius >= 1) {
    const auto ut = static_cast<VertexId>(t);
    for (VertexId i = 0; i < ut; ++i) {
      vertices.push_back({1, i, VertexTag::z});
      const VertexId here = 1 + i;
      const VertexId next = 1 + (i + 1) % ut;
      edges.emplace_back(0, here);
      edges.emplace_back(here, next);
      triangles.emplace_back(0, here, next);
    }
  }

  VertexId parent_offset = 1;
  for (int n = 2; n <= radius; ++n) {
    const auto parents = static_cast<VertexId>(sizes[static_cast<std::size_t>(n) - 1]);
    const auto count = static_cast<VertexId>(sizes[static_cast<std::size_t>(n)]);
    const auto child_offset = static_cast<VertexId>(vertices.size());
    for (VertexId pos = 0; pos < count; ++pos) {
      vertices.push_back({static_cast<std::uint32_t>(n), pos, VertexTag::z});
    }

    // Position 0 is the child shared by the last and the first parent.
    VertexId shared = 0;
    VertexId next_pos = 1;
    for (VertexId p = 0; p < parents; ++p) {
      const VertexId parent = parent_offset + p;
      const VertexId next_parent = parent_offset + (p + 1) % parents;
      const VertexId kids = static_cast<VertexId>(vertices[parent].tag == VertexTag::y ? t - 4 : t - 3);

      vertices[child_offset + shared].tag = VertexTag::y;
      VertexId prev = shared;
      edges.emplace_back(parent, child_offset + prev);
      for (VertexId k = 1; k < kids; ++k) {
        const bool last = k + 1 == kids;
        const VertexId pos = (last && p + 1 == parents) ? 0 : next_pos++;
        edges.emplace_back(parent, child_offset + pos);
        triangles.emplace_back(parent, child_offset + prev, child_offset + pos);
        prev = pos;
      }
      triangles.emplace_back(parent, next_parent, child_offset + prev);
      shared = prev;
    }
    if (next_pos != count) {
      throw Error(ErrorCode::metric_mismatch, "layer " + std::to_string(n) + " walk produced " +
                                                  std::to_string(next_pos) + " children, projected " +
                                                  std::to_string(count));
    }
    for (VertexId pos = 0; pos < count; ++pos) {
      edges.emplace_back(child_offset + pos, child_offset + (pos + 1) % count);
    }
    parent_offset += parents;
  }

  return TriangulatedDisc::assemble(t, radius, std::move(vertices), std::move(edges), std::move(triangles));
}

TriangulatedDisc truncate(const TriangulatedDisc& disc, int radius) {
  if (radius < 0 || radius > disc.radius()) {
    throw Error(ErrorCode::radius_out_of_range,
                "truncation radius " + std::to_string(radius) + " outside 0.." + std::to_string(disc.radius()));
  }
  const auto all = disc.vertices();
  constexpr auto dropped = static_cast<VertexId>(-1);
  std::vector<VertexId> remap(all.size(), dropped);
  std::vector<Vertex> vertices;
  for (VertexId id = 0; id < all.size(); ++id) {
    if (all[id].layer <= static_cast<std::uint32_t>(radius)) {
      remap[id] = static_cast<VertexId>(vertices.size());
      vertices.push_back(all[id]);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : disc.edges()) {
    if (remap[e.a] != dropped && remap[e.b] != dropped) edges.emplace_back(remap[e.a], remap[e.b]);
  }
  std::vector<Triangle> triangles;
  for (const auto& tri : disc.triangles()) {
    const auto& v = tri.v;
    if (remap[v[0]] != dropped && remap[v[1]] != dropped && remap[v[2]] != dropped) {
      triangles.emplace_back(remap[v[0]], remap[v[1]], remap[v[2]]);
    }
  }
  return TriangulatedDisc::assemble(disc.t(), radius, std::move(vertices), std::move(edges), std::move(triangles));
}

namespace {

class Reporter {
 public:
  explicit Reporter(std::size_t cap) : cap_(cap) {}

  void add(Invariant kind, std::string witness) {
    auto& seen = counts_[static_cast<std::size_t>(kind)];
    if (seen++ < cap_) out_.push_back({kind, std::move(witness)});
  }

  std::vector<Violation> finish() {
    for (std::size_t k = 0; k < counts_.size(); ++k) {
      if (counts_[k] > cap_) {
        out_.push_back({static_cast<Invariant>(k), std::to_string(counts_[k] - cap_) + " further violations"});
      }
    }
    return std::move(out_);
  }

 private:
  std::size_t cap_;
  std::array<std::size_t, static_cast<std::size_t>(Invariant::flagness) + 1> counts_{};
  std::vector<Violation> out_;
};

std::string edge_name(VertexId a, VertexId b) {
  return "edge (" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string triangle_name(const Triangle& tri) {
  return "triangle (" + std::to_string(tri.v[0]) + "," + std::to_string(tri.v[1]) + "," +
         std::to_string(tri.v[2]) + ")";
}

}  // namespace

std::vector<Violation> validate_disc(const TriangulatedDisc& disc, std::size_t max_reports_per_kind) {
  Reporter report(max_reports_per_kind);
  const auto vertices = disc.vertices();
  const std::size_t n_vertices = vertices.size();
  const auto radius = static_cast<std::uint32_t>(std::max(disc.radius(), 0));

  bool indices_ok = true;
  for (const auto& e : disc.edges()) {
    if (e.a >= n_vertices || e.b >= n_vertices) {
      report.add(Invariant::vertex_index, edge_name(e.a, e.b) + " references a missing vertex");
      indices_ok = false;
    } else if (e.a == e.b) {
      report.add(Invariant::vertex_index, edge_name(e.a, e.b) + " is a loop");
      indices_ok = false;
    }
  }
  for (const auto& tri : disc.triangles()) {
    for (VertexId v : tri.v) {
      if (v >= n_vertices) {
        report.add(Invariant::vertex_index, triangle_name(tri) + " references a missing vertex");
        indices_ok = false;
        break;
      }
    }
    if (tri.v[0] == tri.v[1] || tri.v[1] == tri.v[2]) {
      report.add(Invariant::triangle_shape, triangle_name(tri) + " repeats a vertex");
      indices_ok = false;
    }
  }
  if (!indices_ok) return report.finish();

  const auto centers = std::count_if(vertices.begin(), vertices.end(), [](const Vertex& v) { return v.layer == 0; });
  if (centers != 1) report.add(Invariant::single_center, std::to_string(centers) + " vertices on layer 0");

  for (VertexId id = 0; id < n_vertices; ++id) {
    if (vertices[id].layer > radius) {
      report.add(Invariant::layer_structure, "vertex " + std::to_string(id) + " on layer " +
                                                 std::to_string(vertices[id].layer) + " beyond radius");
    }
  }
  for (int n = 0; n <= disc.radius(); ++n) {
    const auto ids = disc.layer(n);
    if (ids.empty()) {
      report.add(Invariant::layer_structure, "layer " + std::to_string(n) + " is empty");
      continue;
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (vertices[ids[i]].position != i) {
        report.add(Invariant::layer_structure, "layer " + std::to_string(n) + " positions are not 0.." +
                                                   std::to_string(ids.size() - 1));
        break;
      }
    }
  }

  const MeshIndex index(disc);
  const auto edges = disc.edges();
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i] == edges[i - 1]) report.add(Invariant::duplicate_edge, edge_name(edges[i].a, edges[i].b));
  }
  for (const auto& e : edges) {
    const auto la = vertices[e.a].layer;
    const auto lb = vertices[e.b].layer;
    if ((la > lb ? la - lb : lb - la) > 1) {
      report.add(Invariant::layer_structure, edge_name(e.a, e.b) + " joins layers " + std::to_string(la) + " and " +
                                                 std::to_string(lb));
    }
  }

  for (VertexId id = 0; id < n_vertices; ++id) {
    if (vertices[id].layer < radius && index.degree(id) != static_cast<std::size_t>(disc.t())) {
      report.add(Invariant::interior_degree, "vertex " + std::to_string(id) + " (layer " +
                                                 std::to_string(vertices[id].layer) + ") has degree " +
                                                 std::to_string(index.degree(id)) + ", expected " +
                                                 std::to_string(disc.t()));
    }
  }

  for (int n = 1; n <= disc.radius(); ++n) {
    const auto ids = disc.layer(n);
    if (ids.empty()) continue;
    const auto layer = static_cast<std::uint32_t>(n);
    if (n == 1 && ids.size() != static_cast<std::size_t>(disc.t())) {
      report.add(Invariant::layer_cycle, "layer 1 has " + std::to_string(ids.size()) + " vertices, expected t");
    }
    bool simple = true;
    for (VertexId id : ids) {
      const auto adj = index.neighbors(id);
      const auto same = std::count_if(adj.begin(), adj.end(), [&](VertexId w) { return vertices[w].layer == layer; });
      if (same != 2) {
        report.add(Invariant::layer_cycle, "vertex " + std::to_string(id) + " has " + std::to_string(same) +
                                               " neighbours on its own layer " + std::to_string(n));
        simple = false;
      }
    }
    if (!simple) continue;
    // Walk the 2-regular layer graph from its first vertex.
    std::size_t steps = 0;
    VertexId prev = ids.front();
    VertexId cur = ids.front();
    do {
      VertexId next = cur;
      for (VertexId w : index.neighbors(cur)) {
        if (vertices[w].layer == layer && w != prev) {
          next = w;
          break;
        }
      }
      if (next == cur) {
        // Both same-layer neighbours equal prev: a doubled edge; treat as length 2.
        for (VertexId w : index.neighbors(cur)) {
          if (vertices[w].layer == layer) next = w;
        }
      }
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != ids.front() && steps <= ids.size());
    if (steps != ids.size()) {
      report.add(Invariant::layer_cycle, "layer " + std::to_string(n) + " is not a single cycle (" +
                                             std::to_string(steps) + " of " + std::to_string(ids.size()) +
                                             " vertices reached)");
    }
  }

  for (const auto& tri : disc.triangles()) {
    const auto l0 = vertices[tri.v[0]].layer;
    const auto l1 = vertices[tri.v[1]].layer;
    const auto l2 = vertices[tri.v[2]].layer;
    if (std::max({l0, l1, l2}) - std::min({l0, l1, l2}) > 1) {
      report.add(Invariant::triangle_layers, triangle_name(tri) + " spans non-consecutive layers");
    }
    const std::array<std::pair<VertexId, VertexId>, 3> sides{
        {{tri.v[0], tri.v[1]}, {tri.v[1], tri.v[2]}, {tri.v[0], tri.v[2]}}};
    for (const auto& [a, b] : sides) {
      if (!index.has_edge(a, b)) report.add(Invariant::triangle_edge_missing, triangle_name(tri) + " lacks " + edge_name(a, b));
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i > 0 && edges[i] == edges[i - 1]) continue;
    const auto& e = edges[i];
    const bool outer = vertices[e.a].layer == radius && vertices[e.b].layer == radius;
    const std::size_t expected = outer ? 1 : 2;
    const std::size_t found = index.triangles_with_edge(e.a, e.b).size();
    if (found != expected) {
      report.add(Invariant::edge_triangle_multiplicity, edge_name(e.a, e.b) + " lies in " + std::to_string(found) +
                                                            " triangles, expected " + std::to_string(expected));
    }
  }

  const auto euler = static_cast<std::int64_t>(n_vertices) - static_cast<std::int64_t>(edges.size()) +
                     static_cast<std::int64_t>(disc.triangles().size());
  if (euler != 1) {
    report.add(Invariant::euler_characteristic, "V - E + F = " + std::to_string(euler));
  }

  const auto triangles = disc.triangles();
  for (VertexId a = 0; a < n_vertices; ++a) {
    const auto adj = index.neighbors(a);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] <= a || (i > 0 && adj[i] == adj[i - 1])) continue;
      for (std::size_t j = i + 1; j < adj.size(); ++j) {
        if (adj[j] == adj[j - 1]) continue;
        if (!index.has_edge(adj[i], adj[j])) continue;
        const Triangle clique(a, adj[i], adj[j]);
        if (!std::binary_search(triangles.begin(), triangles.end(), clique)) {
          report.add(Invariant::flagness, "3-clique " + triangle_name(clique) + " spans no triangle");
        }
      }
    }
  }

  return report.finish();
}

PickArea pick_area(const TriangulatedDisc& disc) {
  if (disc.radius() < 1) throw Error(ErrorCode::radius_out_of_range, "Pick's formula needs radius >= 1");
  PickArea pick;
  const auto radius = static_cast<std::uint32_t>(disc.radius());
  for (const auto& v : disc.vertices()) {
    if (v.layer < radius) ++pick.interior;
    else if (v.layer == radius) ++pick.boundary;
  }
  pick.area = static_cast<std::int64_t>(disc.triangles().size());
  if (pick.area != 2 * pick.interior + pick.boundary - 2) {
    std::ostringstream msg;
    msg << "area " << pick.area << " != 2*" << pick.interior << " + " << pick.boundary << " - 2";
    throw Error(ErrorCode::metric_mismatch, msg.str());
  }
  return pick;
}

}  // namespace tuniform
