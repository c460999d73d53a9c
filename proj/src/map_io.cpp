#include "trisurf/map_io.hpp"

#include <fstream>
#include <sstream>

namespace trisurf {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json to_json(const CombMap& map) {
  ordered_json j;
  j["n_darts"] = map.n_darts();
  j["sigma"] = map.sigma_images();
  j["alpha"] = map.alpha_images();
  j["root"] = map.root();
  return j;
}

ordered_json to_json(const BoundaryMap& bmap) {
  ordered_json j = to_json(bmap.map);
  if (!bmap.boundary_roots.empty()) {
    ordered_json list = ordered_json::array();
    for (Dart r : bmap.boundary_roots) list.push_back(face_darts(bmap.map, r));
    j["boundaries"] = list;
  }
  return j;
}

namespace {

std::vector<Dart> dart_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw MapError(std::string("map file: missing array '") + key + "'");
  std::vector<Dart> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) throw MapError(std::string("map file: non-integer entry in '") + key + "'");
    out.push_back(v.get<Dart>());
  }
  return out;
}

}  // namespace

BoundaryMap boundary_map_from_json(const json& j) {
  if (!j.is_object()) throw MapError("map file: expected a JSON object");
  if (!j.contains("n_darts") || !j["n_darts"].is_number_integer()) throw MapError("map file: missing 'n_darts'");
  if (!j.contains("root") || !j["root"].is_number_integer()) throw MapError("map file: missing 'root'");
  const int n = j["n_darts"].get<int>();
  auto sigma = dart_array(j, "sigma");
  auto alpha = dart_array(j, "alpha");
  if (static_cast<int>(sigma.size()) != n || static_cast<int>(alpha.size()) != n) {
    throw MapError("map file: array lengths differ from n_darts");
  }
  BoundaryMap out{CombMap(std::move(sigma), std::move(alpha), j["root"].get<Dart>()), {}};
  if (j.contains("boundaries")) {
    if (!j["boundaries"].is_array()) throw MapError("map file: 'boundaries' must be an array");
    for (const auto& b : j["boundaries"]) {
      if (!b.is_array() || b.empty() || !b[0].is_number_integer()) {
        throw MapError("map file: each boundary must be a nonempty dart list");
      }
      const Dart r = b[0].get<Dart>();
      if (r < 1 || r > n) throw MapError("map file: boundary dart out of range");
      std::vector<Dart> listed;
      for (const auto& d : b) listed.push_back(d.get<Dart>());
      for (Dart d : listed) {
        if (d < 1 || d > n) throw MapError("map file: boundary dart out of range");
      }
      // The listed darts must be exactly the face walk from the root.
      Dart x = r;
      for (std::size_t i = 0; i < listed.size(); ++i) {
        if (listed[i] != x) throw MapError("map file: boundary list is not a sigma-cycle from its root");
        x = out.map.sigma_images()[x - 1];
        if (x < 1 || x > n) throw MapError("map file: sigma out of range");
      }
      if (x != r) throw MapError("map file: boundary list does not close up");
      out.boundary_roots.push_back(r);
    }
  }
  return out;
}

CombMap map_from_json(const json& j) { return boundary_map_from_json(j).map; }

std::string dump_map(const CombMap& map) { return to_json(map).dump(); }
std::string dump_map(const BoundaryMap& bmap) { return to_json(bmap).dump(); }

BoundaryMap read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MapError("cannot open map file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw MapError("map file " + path + ": " + e.what());
  }
  return boundary_map_from_json(j);
}

void write_map_file(const std::string& path, const BoundaryMap& bmap) {
  std::ofstream out(path);
  if (!out) throw MapError("cannot write map file: " + path);
  out << dump_map(bmap) << '\n';
}

}  // namespace trisurf
