#pragma once

// Canonical layered disc of a t-uniform complex around one interior vertex.
//
// Layer 0 is the center; layer n is the sphere S_n. Vertex ids are assigned
// layer by layer in canonical (counterclockwise) position order.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tuniform {

using VertexId = std::uint32_t;

enum class VertexTag : std::uint8_t { center, y, z };

std::string_view to_string(VertexTag tag);

struct Vertex {
  std::uint32_t layer = 0;
  std::uint32_t position = 0;
  VertexTag tag = VertexTag::center;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Triangle {
  std::array<VertexId, 3> v{};

  Triangle() = default;
  Triangle(VertexId x, VertexId y, VertexId z);

  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct BuildLimits {
  std::size_t max_vertices = 2'000'000;
  int max_radius = 64;
};

class TriangulatedDisc {
 public:
  /// Assembles a disc from raw parts without validating it. Edges and
  /// triangles are sorted; duplicates are kept so validation can see them.
  static TriangulatedDisc assemble(int t, int radius, std::vector<Vertex> vertices,
                                   std::vector<Edge> edges, std::vector<Triangle> triangles);

  int t() const { return t_; }
  int radius() const { return radius_; }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Triangle> triangles() const { return triangles_; }

  /// Vertex ids of layer n ordered by position. Empty for layers that do not exist.
  std::span<const VertexId> layer(int n) const;
  int layer_count() const { return static_cast<int>(layers_.size()); }

 private:
  TriangulatedDisc() = default;

  int t_ = 0;
  int radius_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
  std::vector<std::vector<VertexId>> layers_;
};

/// Projected vertex count of each layer 0..radius from Y/Z bookkeeping alone.
/// Throws InvalidT, DegenerateRadius or LimitExceeded exactly as build_disc would.
std::vector<std::uint64_t> projected_layer_sizes(int t, int radius, const BuildLimits& limits = {});

/// Builds the canonical disc. Parents on layer n-1 are walked in order; a Y
/// parent gets t-4 children, a Z parent t-3, and consecutive parents share
/// one child.
TriangulatedDisc build_disc(int t, int radius, const BuildLimits& limits = {});

/// Largest radius whose disc fits inside `limits`, capped at `cap`.
int max_feasible_radius(int t, const BuildLimits& limits, int cap);

/// Sub-disc made of layers 0..radius, renumbered in the original id order.
TriangulatedDisc truncate(const TriangulatedDisc& disc, int radius);

enum class Invariant {
  vertex_index,
  single_center,
  layer_structure,
  interior_degree,
  layer_cycle,
  duplicate_edge,
  triangle_shape,
  triangle_layers,
  triangle_edge_missing,
  edge_triangle_multiplicity,
  euler_characteristic,
  flagness,
};

std::string_view to_string(Invariant invariant);

struct Violation {
  Invariant invariant;
  std::string witness;
};

/// Every violated structural invariant. Empty means the disc is sound.
std::vector<Violation> validate_disc(const TriangulatedDisc& disc, std::size_t max_reports_per_kind = 8);

struct PickArea {
  std::int64_t interior = 0;
  std::int64_t boundary = 0;
  std::int64_t area = 0;
};

/// Interior/boundary vertex counts and triangle count; throws MetricMismatch
/// unless area = 2*interior + boundary - 2. Needs radius >= 1.
PickArea pick_area(const TriangulatedDisc& disc);

}  // namespace tuniform
