#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace filling {

/// One verification record. A check passes when its statistic `min_value`
/// clears the check's own threshold; `pass` is authoritative.
struct CheckReport {
  std::string id;
  std::string domain;
  std::size_t grid_size = 0;
  double min_value = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::pair<std::string, double>> argmin;
  bool pass = false;
  double tolerance = 0.0;
  std::vector<std::pair<std::string, std::string>> notes;

  void note(std::string key, std::string value);
  void note(std::string key, double value);
};

std::string to_key_value(const CheckReport& r);
std::string to_key_value(const std::vector<CheckReport>& rs);

nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const std::vector<CheckReport>& rs);
CheckReport check_report_from_json(const nlohmann::json& j);

bool all_pass(const std::vector<CheckReport>& rs);

/// Shortest decimal form that round-trips the double.
std::string format_double(double v);

}  // namespace filling
