#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "filling/combinatorial_map.hpp"

namespace filling {

/// {dart_count, alpha, sigma, straight_corners, [twisted], [genus]}
nlohmann::json map_to_json(const CombinatorialMap& map, std::optional<int> genus = std::nullopt);

/// Throws InvalidInput on a malformed document.
CombinatorialMap map_from_json(const nlohmann::json& j);

/// The optional "genus" field, if present.
std::optional<int> genus_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace filling
