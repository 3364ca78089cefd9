#include "tuniform/mesh_index.hpp"

#include <algorithm>

#include "tuniform/error.hpp"

namespace tuniform {

MeshIndex::MeshIndex(const TriangulatedDisc& disc) : triangles_(disc.triangles()) {
  const std::size_t n = disc.vertices().size();
  auto check = [n](VertexId v) {
    if (v >= n) throw Error(ErrorCode::invalid_format, "vertex id " + std::to_string(v) + " out of range");
  };

  neighbor_offsets_.assign(n + 1, 0);
  for (const auto& e : disc.edges()) {
    check(e.a);
    check(e.b);
    ++neighbor_offsets_[e.a + 1];
    ++neighbor_offsets_[e.b + 1];
  }
  for (std::size_t i = 0; i < n; ++i) neighbor_offsets_[i + 1] += neighbor_offsets_[i];
  neighbors_.resize(neighbor_offsets_[n]);
  std::vector<std::size_t> fill(neighbor_offsets_.begin(), neighbor_offsets_.end() - 1);
  for (const auto& e : disc.edges()) {
    neighbors_[fill[e.a]++] = e.b;
    neighbors_[fill[e.b]++] = e.a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(neighbors_.begin() + static_cast<std::ptrdiff_t>(neighbor_offsets_[i]),
              neighbors_.begin() + static_cast<std::ptrdiff_t>(neighbor_offsets_[i + 1]));
  }

  triangle_offsets_.assign(n + 1, 0);
  for (const auto& tri : triangles_) {
    for (VertexId v : tri.v) {
      check(v);
      ++triangle_offsets_[v + 1];
    }
  }
  for (std::size_t i = 0; i < n; ++i) triangle_offsets_[i + 1] += triangle_offsets_[i];
  incident_triangles_.resize(triangle_offsets_[n]);
  fill.assign(triangle_offsets_.begin(), triangle_offsets_.end() - 1);
  for (std::uint32_t i = 0; i < triangles_.size(); ++i) {
    for (VertexId v : triangles_[i].v) incident_triangles_[fill[v]++] = i;
  }
}

std::span<const VertexId> MeshIndex::neighbors(VertexId v) const {
  return {neighbors_.data() + neighbor_offsets_[v], neighbor_offsets_[v + 1] - neighbor_offsets_[v]};
}

bool MeshIndex::has_edge(VertexId u, VertexId v) const {
  const auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::span<const std::uint32_t> MeshIndex::triangles_of(VertexId v) const {
  return {incident_triangles_.data() + triangle_offsets_[v], triangle_offsets_[v + 1] - triangle_offsets_[v]};
}

std::vector<std::uint32_t> MeshIndex::triangles_with_edge(VertexId u, VertexId v) const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i : triangles_of(u)) {
    const auto& tri = triangles_[i].v;
    if (tri[0] == v || tri[1] == v || tri[2] == v) out.push_back(i);
  }
  return out;
}

}  // namespace tuniform
