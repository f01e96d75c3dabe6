#include "filling/map_io.hpp"

#include <fstream>
#include <sstream>

#include "filling/errors.hpp"

namespace filling {

nlohmann::json map_to_json(const CombinatorialMap& map, std::optional<int> genus) {
  std::vector<int> straight;
  for (int d = 0; d < map.dart_count(); ++d)
    if (map.straight(d)) straight.push_back(d);
  nlohmann::json j = {{"dart_count", map.dart_count()},
                      {"alpha", map.alpha_array()},
                      {"sigma", map.sigma_array()},
                      {"straight_corners", straight}};
  if (map.has_twist()) {
    std::vector<int> twisted;
    for (int d = 0; d < map.dart_count(); ++d)
      if (map.twisted(d)) twisted.push_back(d);
    j["twisted"] = twisted;
  }
  if (genus) j["genus"] = *genus;
  return j;
}

namespace {

std::vector<bool> flags_from(const nlohmann::json& j, const char* key, int n) {
  std::vector<bool> out(n, false);
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) {
    const int d = v.get<int>();
    if (d < 0 || d >= n) throw InvalidInput(std::string(key) + " lists dart out of range");
    out[d] = true;
  }
  return out;
}

}  // namespace

CombinatorialMap map_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("dart_count").get<int>();
    auto alpha = j.at("alpha").get<std::vector<int>>();
    auto sigma = j.at("sigma").get<std::vector<int>>();
    if (static_cast<int>(alpha.size()) != n) throw InvalidInput("alpha size differs from dart_count");
    return CombinatorialMap(std::move(alpha), std::move(sigma), flags_from(j, "straight_corners", n),
                            flags_from(j, "twisted", n));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed map document: ") + e.what());
  }
}

std::optional<int> genus_from_json(const nlohmann::json& j) {
  if (j.contains("genus")) return j.at("genus").get<int>();
  return std::nullopt;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace filling
