#pragma once

// Sphere lengths, ring areas and cumulative areas measured on a disc by
// direct counting over BFS distances from the center. Nothing here reads
// the builder's bookkeeping except to cross-check it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tuniform/disc.hpp"
#include "tuniform/exact_ratio.hpp"
#include "tuniform/mesh_index.hpp"

namespace tuniform {

struct YzCounts {
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend bool operator==(const YzCounts&, const YzCounts&) = default;
};

struct SphereReport {
  int t = 0;
  int n = 0;
  std::int64_t length = 0;
  std::int64_t vertex_count = 0;
  std::int64_t y_count = 0;
  std::int64_t z_count = 0;
  std::optional<std::int64_t> ring_area;  // absent at n = 0
  std::int64_t cumulative_area = 0;
  std::int64_t sum_lengths = 0;
  std::optional<ExactRatio> ratio;  // A_n / |S_n|, absent at n = 0
};

/// Graph distance from the unique layer-0 vertex. Throws Disconnected when
/// a vertex is unreachable and MetricMismatch when a distance differs from
/// the vertex's layer.
std::vector<std::uint32_t> bfs_layers(const TriangulatedDisc& disc);

class DiscMetrics {
 public:
  /// Keeps a reference to `disc`; it must outlive the metrics.
  explicit DiscMetrics(const TriangulatedDisc& disc);

  const TriangulatedDisc& disc() const { return *disc_; }
  int t() const { return disc_->t(); }
  int radius() const { return disc_->radius(); }
  const std::vector<std::uint32_t>& distances() const { return distance_; }

  /// Edges with both endpoints at distance n.
  std::int64_t sphere_length(int n) const;
  std::int64_t vertex_count(int n) const;
  std::int64_t sum_lengths(int n) const;

  /// Triangles with vertices on layers n-1 and n only, touching both.
  std::int64_t ring_triangles(int n) const;
  /// Triangle count of ring n found by walking around it one cross edge at
  /// a time, starting from a fixed edge <u0, v0>.
  std::int64_t ring_walk(int n) const;
  /// ring_triangles, cross-checked against ring_walk and |S_{n-1}| + |S_n|.
  std::int64_t ring_area(int n) const;

  /// Triangles with every vertex within distance n.
  std::int64_t triangles_within(int n) const;
  /// triangles_within, cross-checked against 2*sum|S_k| - |S_n| and Pick's
  /// formula on the truncated disc.
  std::int64_t cumulative_area(int n) const;

  /// Y/Z split of distance-n vertices from BFS adjacency alone.
  YzCounts yz_structural(int n) const;
  /// Same split read from construction tags.
  YzCounts yz_from_tags(int n) const;
  /// yz_structural, cross-checked per vertex against the tags.
  YzCounts yz_partition(int n) const;

  SphereReport report(int n) const;

 private:
  void require(int n, int lowest) const;
  bool in_ring(std::uint32_t tri, int n) const;

  const TriangulatedDisc* disc_;
  MeshIndex index_;
  std::vector<std::uint32_t> distance_;
  std::vector<std::int64_t> length_;
  std::vector<std::int64_t> vertices_;
  std::vector<std::int64_t> ring_;
  std::vector<std::int64_t> within_;
};

/// Reports for n = 0..radius.
std::vector<SphereReport> full_report(const TriangulatedDisc& disc);

/// Columns t,n,length,sum,ring,area,ratio_exact,ratio_decimal.
std::string reports_to_csv(const std::vector<SphereReport>& reports, int precision = 12);
nlohmann::json reports_to_json(const std::vector<SphereReport>& reports, int precision = 12);

}  // namespace tuniform
