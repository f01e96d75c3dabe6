#include "filling/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace filling {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void CheckReport::note(std::string key, std::string value) {
  notes.emplace_back(std::move(key), std::move(value));
}

void CheckReport::note(std::string key, double value) {
  notes.emplace_back(std::move(key), format_double(value));
}

std::string to_key_value(const CheckReport& r) {
  std::string out;
  auto line = [&out](const std::string& k, const std::string& v) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  };
  line("check", r.id);
  line("domain", r.domain);
  line("grid_size", std::to_string(r.grid_size));
  line("min_value", format_double(r.min_value));
  std::string where;
  for (const auto& [name, value] : r.argmin) {
    if (!where.empty()) where += ',';
    where += name + ':' + format_double(value);
  }
  line("argmin", where);
  line("pass", r.pass ? "true" : "false");
  line("tolerance", format_double(r.tolerance));
  for (const auto& [k, v] : r.notes) line("note." + k, v);
  return out;
}

std::string to_key_value(const std::vector<CheckReport>& rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += '\n';
    out += to_key_value(rs[i]);
  }
  return out;
}

namespace {

// JSON has no inf/nan; keep them as strings so the document stays valid.
nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

double number_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json argmin = nlohmann::json::object();
  for (const auto& [name, value] : r.argmin) argmin[name] = json_number(value);
  nlohmann::json notes = nlohmann::json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return {{"check", r.id},
          {"domain", r.domain},
          {"grid_size", r.grid_size},
          {"min_value", json_number(r.min_value)},
          {"argmin", argmin},
          {"pass", r.pass},
          {"tolerance", r.tolerance},
          {"notes", notes}};
}

nlohmann::json to_json(const std::vector<CheckReport>& rs) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : rs) checks.push_back(to_json(r));
  return {{"checks", checks}, {"pass", all_pass(rs)}};
}

CheckReport check_report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.id = j.at("check").get<std::string>();
  r.domain = j.at("domain").get<std::string>();
  r.grid_size = j.at("grid_size").get<std::size_t>();
  r.min_value = number_from_json(j.at("min_value"));
  for (const auto& [k, v] : j.at("argmin").items()) r.argmin.emplace_back(k, number_from_json(v));
  r.pass = j.at("pass").get<bool>();
  r.tolerance = j.at("tolerance").get<double>();
  for (const auto& [k, v] : j.at("notes").items()) r.notes.emplace_back(k, v.get<std::string>());
  return r;
}

bool all_pass(const std::vector<CheckReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const CheckReport& r) { return r.pass; });
}

}  // namespace filling
