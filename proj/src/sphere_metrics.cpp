#include "tuniform/sphere_metrics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "tuniform/error.hpp"

namespace tuniform {

namespace {

constexpr auto unreached = static_cast<std::uint32_t>(-1);

std::vector<std::uint32_t> bfs_from_center(const TriangulatedDisc& disc, const MeshIndex& index) {
  const auto center = disc.layer(0);
  if (center.size() != 1) {
    throw Error(ErrorCode::metric_mismatch, "disc has " + std::to_string(center.size()) + " center vertices");
  }
  std::vector<std::uint32_t> dist(disc.vertices().size(), unreached);
  std::deque<VertexId> queue{center.front()};
  dist[center.front()] = 0;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : index.neighbors(v)) {
      if (dist[w] == unreached) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  const auto vertices = disc.vertices();
  for (VertexId id = 0; id < dist.size(); ++id) {
    if (dist[id] == unreached) {
      throw Error(ErrorCode::disconnected, "vertex " + std::to_string(id) + " is unreachable from the center");
    }
    if (dist[id] != vertices[id].layer) {
      throw Error(ErrorCode::metric_mismatch, "vertex " + std::to_string(id) + " at distance " +
                                                  std::to_string(dist[id]) + " sits on layer " +
                                                  std::to_string(vertices[id].layer));
    }
  }
  return dist;
}

}  // namespace

std::vector<std::uint32_t> bfs_layers(const TriangulatedDisc& disc) {
  const MeshIndex index(disc);
  return bfs_from_center(disc, index);
}

DiscMetrics::DiscMetrics(const TriangulatedDisc& disc)
    : disc_(&disc), index_(disc), distance_(bfs_from_center(disc, index_)) {
  const auto size = static_cast<std::size_t>(disc.radius()) + 1;
  length_.assign(size, 0);
  vertices_.assign(size, 0);
  ring_.assign(size, 0);
  within_.assign(size, 0);
  for (std::uint32_t d : distance_) {
    if (d < size) ++vertices_[d];
  }
  for (const auto& e : disc.edges()) {
    if (distance_[e.a] == distance_[e.b] && distance_[e.a] < size) ++length_[distance_[e.a]];
  }
  for (const auto& tri : disc.triangles()) {
    const auto d0 = distance_[tri.v[0]];
    const auto d1 = distance_[tri.v[1]];
    const auto d2 = distance_[tri.v[2]];
    const auto lo = std::min({d0, d1, d2});
    const auto hi = std::max({d0, d1, d2});
    if (hi >= size) continue;
    ++within_[hi];
    if (hi == lo + 1) ++ring_[hi];
  }
  for (std::size_t n = 1; n < size; ++n) within_[n] += within_[n - 1];
}

void DiscMetrics::require(int n, int lowest) const {
  if (n < lowest || n > radius()) {
    throw Error(ErrorCode::radius_out_of_range, "n = " + std::to_string(n) + " outside " + std::to_string(lowest) +
                                                    ".." + std::to_string(radius()));
  }
}

std::int64_t DiscMetrics::sphere_length(int n) const {
  require(n, 0);
  return length_[static_cast<std::size_t>(n)];
}

std::int64_t DiscMetrics::vertex_count(int n) const {
  require(n, 0);
  return vertices_[static_cast<std::size_t>(n)];
}

std::int64_t DiscMetrics::sum_lengths(int n) const {
  require(n, 0);
  std::int64_t sum = 0;
  for (int k = 0; k <= n; ++k) sum += length_[static_cast<std::size_t>(k)];
  return sum;
}

std::int64_t DiscMetrics::ring_triangles(int n) const {
  require(n, 1);
  return ring_[static_cast<std::size_t>(n)];
}

bool DiscMetrics::in_ring(std::uint32_t tri, int n) const {
  const auto inner = static_cast<std::uint32_t>(n - 1);
  const auto& v = disc_->triangles()[tri].v;
  bool has_inner = false;
  bool has_outer = false;
  for (VertexId id : v) {
    if (distance_[id] == inner) has_inner = true;
    else if (distance_[id] == inner + 1) has_outer = true;
    else return false;
  }
  return has_inner && has_outer;
}

std::int64_t DiscMetrics::ring_walk(int n) const {
  require(n, 1);
  const auto inner = static_cast<std::uint32_t>(n - 1);
  const auto outer = inner + 1;

  // Start edge <u0, v0>: smallest inner vertex, its smallest outer neighbour.
  VertexId u0 = 0;
  while (u0 < distance_.size() && distance_[u0] != inner) ++u0;
  const auto adj = index_.neighbors(u0);
  const auto it = std::find_if(adj.begin(), adj.end(), [&](VertexId w) { return distance_[w] == outer; });
  if (it == adj.end()) return 0;
  const VertexId v0 = *it;

  auto ring_triangles_on = [&](VertexId a, VertexId b) {
    auto found = index_.triangles_with_edge(a, b);
    std::erase_if(found, [&](std::uint32_t tri) { return !in_ring(tri, n); });
    return found;
  };

  const auto first = ring_triangles_on(u0, v0);
  if (first.empty()) return 0;
  VertexId u = u0;
  VertexId v = v0;
  std::uint32_t current = first.front();
  std::int64_t count = 0;
  const auto limit = static_cast<std::int64_t>(disc_->triangles().size());
  while (count <= limit) {
    ++count;
    const auto& tri = disc_->triangles()[current].v;
    const VertexId w = tri[0] != u && tri[0] != v ? tri[0] : (tri[1] != u && tri[1] != v ? tri[1] : tri[2]);
    // The triangle has one edge on a sphere and one more cross edge.
    if (distance_[w] == outer) v = w;
    else u = w;
    if (u == u0 && v == v0) return count;
    const auto next = ring_triangles_on(u, v);
    const auto other = std::find_if(next.begin(), next.end(), [&](std::uint32_t t) { return t != current; });
    if (other == next.end()) return count;  // open ring: the walk cannot close
    current = *other;
  }
  return count;
}

std::int64_t DiscMetrics::ring_area(int n) const {
  const std::int64_t filtered = ring_triangles(n);
  const std::int64_t walked = ring_walk(n);
  if (filtered != walked) {
    throw Error(ErrorCode::metric_mismatch, "ring " + std::to_string(n) + ": triangle filter counts " +
                                                std::to_string(filtered) + ", walk counts " + std::to_string(walked));
  }
  const std::int64_t lengths = sphere_length(n - 1) + sphere_length(n);
  if (filtered != lengths) {
    throw Error(ErrorCode::metric_mismatch, "ring " + std::to_string(n) + " has " + std::to_string(filtered) +
                                                " triangles, |S_{n-1}| + |S_n| = " + std::to_string(lengths));
  }
  return filtered;
}

std::int64_t DiscMetrics::triangles_within(int n) const {
  require(n, 0);
  return within_[static_cast<std::size_t>(n)];
}

std::int64_t DiscMetrics::cumulative_area(int n) const {
  const std::int64_t area = triangles_within(n);
  const std::int64_t from_lengths = 2 * sum_lengths(n) - sphere_length(n);
  if (area != from_lengths) {
    throw Error(ErrorCode::metric_mismatch, "A_" + std::to_string(n) + " = " + std::to_string(area) +
                                                " but 2*sum|S_k| - |S_n| = " + std::to_string(from_lengths));
  }
  if (n >= 1) {
    std::int64_t interior = 0;
    for (int k = 0; k < n; ++k) interior += vertex_count(k);
    const std::int64_t pick = 2 * interior + vertex_count(n) - 2;
    if (area != pick) {
      throw Error(ErrorCode::metric_mismatch, "A_" + std::to_string(n) + " = " + std::to_string(area) +
                                                  " but Pick gives " + std::to_string(pick));
    }
  }
  return area;
}

YzCounts DiscMetrics::yz_structural(int n) const {
  require(n, 1);
  const auto layer = static_cast<std::uint32_t>(n);
  YzCounts counts;
  for (VertexId id = 0; id < distance_.size(); ++id) {
    if (distance_[id] != layer) continue;
    std::vector<VertexId> inner;
    for (VertexId w : index_.neighbors(id)) {
      if (distance_[w] + 1 == layer) inner.push_back(w);
    }
    if (inner.size() == 1) {
      ++counts.z;
    } else if (inner.size() == 2 && index_.has_edge(inner[0], inner[1])) {
      ++counts.y;
    } else {
      throw Error(ErrorCode::metric_mismatch, "vertex " + std::to_string(id) + " has " +
                                                  std::to_string(inner.size()) +
                                                  " inner neighbours and is neither Y nor Z");
    }
  }
  return counts;
}

YzCounts DiscMetrics::yz_from_tags(int n) const {
  require(n, 1);
  YzCounts counts;
  for (VertexId id : disc_->layer(n)) {
    const auto tag = disc_->vertices()[id].tag;
    if (tag == VertexTag::y) ++counts.y;
    else if (tag == VertexTag::z) ++counts.z;
  }
  return counts;
}

YzCounts DiscMetrics::yz_partition(int n) const {
  const YzCounts structural = yz_structural(n);
  const auto layer = static_cast<std::uint32_t>(n);
  for (VertexId id = 0; id < distance_.size(); ++id) {
    if (distance_[id] != layer) continue;
    std::int64_t inner = 0;
    for (VertexId w : index_.neighbors(id)) inner += distance_[w] + 1 == layer ? 1 : 0;
    const VertexTag expected = inner == 2 ? VertexTag::y : VertexTag::z;
    if (disc_->vertices()[id].tag != expected) {
      throw Error(ErrorCode::metric_mismatch, "vertex " + std::to_string(id) + " is tagged " +
                                                  std::string(to_string(disc_->vertices()[id].tag)) +
                                                  " but is structurally " + std::string(to_string(expected)));
    }
  }
  return structural;
}

SphereReport DiscMetrics::report(int n) const {
  SphereReport r;
  r.t = t();
  r.n = n;
  r.length = sphere_length(n);
  r.vertex_count = vertex_count(n);
  r.sum_lengths = sum_lengths(n);
  r.cumulative_area = cumulative_area(n);
  if (n >= 1) {
    const auto yz = yz_partition(n);
    r.y_count = yz.y;
    r.z_count = yz.z;
    r.ring_area = ring_area(n);
    if (r.length != 0) r.ratio = ExactRatio(BigInt(r.cumulative_area), BigInt(r.length));
  }
  return r;
}

std::vector<SphereReport> full_report(const TriangulatedDisc& disc) {
  const DiscMetrics metrics(disc);
  std::vector<SphereReport> out;
  for (int n = 0; n <= disc.radius(); ++n) out.push_back(metrics.report(n));
  return out;
}

std::string reports_to_csv(const std::vector<SphereReport>& reports, int precision) {
  std::ostringstream out;
  out << "t,n,length,sum,ring,area,ratio_exact,ratio_decimal\n";
  for (const auto& r : reports) {
    out << r.t << ',' << r.n << ',' << r.length << ',' << r.sum_lengths << ',';
    if (r.ring_area) out << *r.ring_area;
    out << ',' << r.cumulative_area << ',';
    if (r.ratio) out << r.ratio->str() << ',' << r.ratio->truncated_decimal(precision);
    else out << ',';
    out << '\n';
  }
  return out.str();
}

nlohmann::json reports_to_json(const std::vector<SphereReport>& reports, int precision) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json row{{"t", r.t},
                       {"n", r.n},
                       {"length", r.length},
                       {"vertex_count", r.vertex_count},
                       {"y_count", r.y_count},
                       {"z_count", r.z_count},
                       {"sum", r.sum_lengths},
                       {"ring", nullptr},
                       {"area", r.cumulative_area},
                       {"ratio_exact", nullptr},
                       {"ratio_decimal", nullptr}};
    if (r.ring_area) row["ring"] = *r.ring_area;
    if (r.ratio) {
      row["ratio_exact"] = r.ratio->str();
      row["ratio_decimal"] = r.ratio->truncated_decimal(precision);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tuniform
