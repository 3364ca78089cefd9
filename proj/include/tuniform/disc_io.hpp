#pragma once

#include <nlohmann/json.hpp>

#include "tuniform/disc.hpp"

namespace tuniform {

/// {t, radius, layers: [[ids]], edges: [[i,j]], triangles: [[i,j,k]], tags: [...]}
nlohmann::json disc_to_json(const TriangulatedDisc& disc);

/// Inverse of disc_to_json. Structure is checked, invariants are not
/// (run validate_disc on the result). Throws InvalidFormat.
TriangulatedDisc disc_from_json(const nlohmann::json& doc);

}  // namespace tuniform
