#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tuniform/disc.hpp"

namespace tuniform {

/// Compressed vertex adjacency and vertex-triangle incidence of a disc.
/// Requires every edge and triangle to reference existing vertices.
class MeshIndex {
 public:
  explicit MeshIndex(const TriangulatedDisc& disc);

  std::size_t vertex_count() const { return neighbor_offsets_.size() - 1; }

  /// Sorted neighbors of v (duplicated edges appear twice).
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool has_edge(VertexId u, VertexId v) const;

  /// Indices into disc.triangles() of triangles incident to v.
  std::span<const std::uint32_t> triangles_of(VertexId v) const;

  /// Indices of triangles containing both u and v.
  std::vector<std::uint32_t> triangles_with_edge(VertexId u, VertexId v) const;

 private:
  std::span<const Triangle> triangles_;
  std::vector<std::size_t> neighbor_offsets_;
  std::vector<VertexId> neighbors_;
  std::vector<std::size_t> triangle_offsets_;
  std::vector<std::uint32_t> incident_triangles_;
};

}  // namespace tuniform
