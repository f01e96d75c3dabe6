#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>

#include "filling/report.hpp"

using namespace filling;

namespace {

CheckReport sample() {
  CheckReport r;
  r.id = "lemma32.grid";
  r.domain = "n in [8,64]";
  r.grid_size = 91200;
  r.min_value = 0.1 + 0.2;
  r.argmin = {{"n", 8}, {"a", 4.71238898038469}, {"x", 1e-300}};
  r.pass = true;
  r.tolerance = 1e-9;
  r.note("sign_changes", 1.0);
  r.note("first_sign", "negative");
  return r;
}

}  // namespace

TEST(Report, FormatDoubleRoundTrips) {
  for (double v : {0.1 + 0.2, 1e-300, -2.5, 12.506292399049254, 1.0 / 3.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Report, KeyValueLayout) {
  const auto text = to_key_value(sample());
  EXPECT_NE(text.find("check=lemma32.grid\n"), std::string::npos);
  EXPECT_NE(text.find("grid_size=91200\n"), std::string::npos);
  EXPECT_NE(text.find("min_value=0.30000000000000004\n"), std::string::npos);
  EXPECT_NE(text.find("argmin=n:8,a:4.71238898038469,x:1e-300\n"), std::string::npos);
  EXPECT_NE(text.find("pass=true\n"), std::string::npos);
  EXPECT_NE(text.find("note.first_sign=negative\n"), std::string::npos);
  const auto two = to_key_value(std::vector<CheckReport>{sample(), sample()});
  EXPECT_NE(two.find("\n\ncheck="), std::string::npos);
}

TEST(Report, JsonRoundTrip) {
  const auto r = sample();
  const auto back = check_report_from_json(to_json(r));
  EXPECT_EQ(back.id, r.id);
  EXPECT_EQ(back.domain, r.domain);
  EXPECT_EQ(back.grid_size, r.grid_size);
  EXPECT_EQ(back.min_value, r.min_value);
  EXPECT_EQ(back.pass, r.pass);
  EXPECT_EQ(back.tolerance, r.tolerance);
  EXPECT_EQ((std::map<std::string, double>(back.argmin.begin(), back.argmin.end())),
            (std::map<std::string, double>(r.argmin.begin(), r.argmin.end())));
  EXPECT_EQ(back.notes.size(), r.notes.size());
}

TEST(Report, NonFiniteValuesSurviveJson) {
  auto r = sample();
  r.min_value = std::numeric_limits<double>::quiet_NaN();
  EXPECT_TRUE(std::isnan(check_report_from_json(to_json(r)).min_value));
  r.min_value = std::numeric_limits<double>::infinity();
  EXPECT_EQ(check_report_from_json(to_json(r)).min_value, r.min_value);
  r.min_value = -std::numeric_limits<double>::infinity();
  EXPECT_EQ(check_report_from_json(to_json(r)).min_value, r.min_value);
}

TEST(Report, SuiteVerdict) {
  auto a = sample(), b = sample();
  EXPECT_TRUE(all_pass({a, b}));
  b.pass = false;
  EXPECT_FALSE(all_pass({a, b}));
  const auto j = to_json(std::vector<CheckReport>{a, b});
  EXPECT_FALSE(j.at("pass").get<bool>());
  EXPECT_EQ(j.at("checks").size(), 2u);
}
