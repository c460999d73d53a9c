#pragma once

#include <string>

#include <json.hpp>

#include "trisurf/comb_map.hpp"

namespace trisurf {

// Map files are JSON objects {n_darts, sigma, alpha, root[, boundaries]}.
// Each entry of `boundaries` lists the darts of one boundary face in sigma
// order, starting at that boundary's root dart.
nlohmann::ordered_json to_json(const CombMap& map);
nlohmann::ordered_json to_json(const BoundaryMap& bmap);

// Both throw MapError on malformed input. The map is not validated.
BoundaryMap boundary_map_from_json(const nlohmann::json& j);
CombMap map_from_json(const nlohmann::json& j);

std::string dump_map(const CombMap& map);
std::string dump_map(const BoundaryMap& bmap);

BoundaryMap read_map_file(const std::string& path);
void write_map_file(const std::string& path, const BoundaryMap& bmap);

}  // namespace trisurf
