#include "tuniform/disc_io.hpp"

#include "tuniform/error.hpp"

namespace tuniform {

using nlohmann::json;

json disc_to_json(const TriangulatedDisc& disc) {
  json layers = json::array();
  for (int n = 0; n < disc.layer_count(); ++n) {
    const auto ids = disc.layer(n);
    layers.push_back(json(std::vector<VertexId>(ids.begin(), ids.end())));
  }
  json edges = json::array();
  for (const auto& e : disc.edges()) edges.push_back({e.a, e.b});
  json triangles = json::array();
  for (const auto& tri : disc.triangles()) triangles.push_back({tri.v[0], tri.v[1], tri.v[2]});
  json tags = json::array();
  for (const auto& v : disc.vertices()) tags.push_back(std::string(to_string(v.tag)));
  return {{"t", disc.t()},         {"radius", disc.radius()}, {"layers", std::move(layers)},
          {"edges", std::move(edges)}, {"triangles", std::move(triangles)}, {"tags", std::move(tags)}};
}

namespace {

VertexTag parse_tag(const std::string& name) {
  if (name == "center") return VertexTag::center;
  if (name == "Y") return VertexTag::y;
  if (name == "Z") return VertexTag::z;
  throw Error(ErrorCode::invalid_format, "unknown vertex tag '" + name + "'");
}

}  // namespace

TriangulatedDisc disc_from_json(const json& doc) {
  try {
    const int t = doc.at("t").get<int>();
    const int radius = doc.at("radius").get<int>();
    const auto& tags = doc.at("tags");
    std::vector<Vertex> vertices(tags.size());
    std::vector<bool> placed(tags.size(), false);
    const auto& layers = doc.at("layers");
    for (std::size_t n = 0; n < layers.size(); ++n) {
      const auto& ids = layers[n];
      for (std::size_t pos = 0; pos < ids.size(); ++pos) {
        const auto id = ids[pos].get<VertexId>();
        if (id >= vertices.size() || placed[id]) {
          throw Error(ErrorCode::invalid_format, "layer list names vertex " + std::to_string(id) + " twice or out of range");
        }
        placed[id] = true;
        vertices[id] = {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(pos),
                        parse_tag(tags[id].get<std::string>())};
      }
    }
    for (std::size_t id = 0; id < placed.size(); ++id) {
      if (!placed[id]) throw Error(ErrorCode::invalid_format, "vertex " + std::to_string(id) + " is on no layer");
    }
    std::vector<Edge> edges;
    for (const auto& e : doc.at("edges")) {
      if (e.size() != 2) throw Error(ErrorCode::invalid_format, "edge must have two endpoints");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    std::vector<Triangle> triangles;
    for (const auto& tri : doc.at("triangles")) {
      if (tri.size() != 3) throw Error(ErrorCode::invalid_format, "triangle must have three vertices");
      triangles.emplace_back(tri[0].get<VertexId>(), tri[1].get<VertexId>(), tri[2].get<VertexId>());
    }
    return TriangulatedDisc::assemble(t, radius, std::move(vertices), std::move(edges), std::move(triangles));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_format, e.what());
  }
}

}  // namespace tuniform
