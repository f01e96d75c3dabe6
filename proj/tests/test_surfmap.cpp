#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "filling/disk_model.hpp"
#include "filling/errors.hpp"
#include "filling/map_io.hpp"
#include "filling/polygeom.hpp"
#include "filling/surfmap.hpp"

using namespace filling;
using namespace filling::surfmap;
using std::numbers::pi;

TEST(GluingWord, ParseAndPrint) {
  const auto w = parse_gluing_word("  a b  a' b' ");
  ASSERT_EQ(w.tokens.size(), 4u);
  EXPECT_EQ(w.tokens[2], (Token{"a", true}));
  EXPECT_EQ(w.to_string(), "a b a' b'");
  EXPECT_EQ(parse_gluing_word(w.to_string()), w);
  EXPECT_EQ(w.labels(), (std::vector<std::string>{"a", "b"}));
}

TEST(GluingWord, Rejects) {
  EXPECT_THROW(parse_gluing_word(""), InvalidInput);
  EXPECT_THROW(parse_gluing_word("a b a"), InvalidInput);
  EXPECT_THROW(parse_gluing_word("a a a'"), InvalidInput);
}

TEST(GluingWord, CanonicalGenus2) {
  EXPECT_EQ(canonical_word(2).to_string(),
            "a0_6 a0_3 a0_1 a0_4 a0_6' a0_3' a0_5 a0_1' a0_2 a0_5' a0_4' a0_2'");
  EXPECT_EQ(canonical_label(1, 3), "a1_3");
  EXPECT_THROW(canonical_word(1), DomainError);
}

TEST(GluingWord, CanonicalShape) {
  for (int g = 2; g <= 50; ++g) {
    const auto w = canonical_word(g);
    ASSERT_EQ(static_cast<int>(w.tokens.size()), 8 * g - 4);
    EXPECT_EQ(static_cast<int>(w.labels().size()), 4 * g - 2);
    EXPECT_NO_THROW(validate_word(w));
    std::set<std::string> primed;
    for (const auto& t : w.tokens)
      if (t.reversed) EXPECT_TRUE(primed.insert(t.label).second);
    EXPECT_EQ(static_cast<int>(primed.size()), 4 * g - 2);
  }
}

TEST(BuildMap, ClassicalSurfaces) {
  const auto torus = surface_report(build_map(parse_gluing_word("a b a' b'")));
  EXPECT_EQ(torus.V, 1);
  EXPECT_EQ(torus.E, 2);
  EXPECT_EQ(torus.F, 1);
  EXPECT_TRUE(torus.orientable);
  EXPECT_EQ(torus.genus, 1);

  const auto sphere = surface_report(build_map(parse_gluing_word("a a'")));
  EXPECT_EQ(sphere.euler, 2);
  EXPECT_TRUE(sphere.orientable);

  const auto projective = surface_report(build_map(parse_gluing_word("a a")));
  EXPECT_FALSE(projective.orientable);
  EXPECT_EQ(projective.euler, 1);

  const auto klein = surface_report(build_map(parse_gluing_word("a b a b'")));
  EXPECT_FALSE(klein.orientable);
  EXPECT_EQ(klein.euler, 0);

  const auto genus2 = surface_report(build_map(parse_gluing_word("a b a' b' c d c' d'")));
  EXPECT_EQ(genus2.genus, 2);
  EXPECT_EQ(genus2.V, 1);
}

TEST(BuildMap, VertexClassesAgreeWithUnionFind) {
  for (int g = 2; g <= 20; ++g) {
    const auto w = canonical_word(g);
    const auto map = build_map(w);
    const auto classes = corner_classes(w);
    EXPECT_EQ(static_cast<int>(std::set<int>(classes.begin(), classes.end()).size()), map.vertex_count());
    EXPECT_EQ(map.vertex_count(), 2 * g - 1);
  }
}

TEST(Canonical, VerifiesForAllGenera) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int g = 2; g <= 50; ++g) {
    const auto v = verify_canonical(g);
    EXPECT_TRUE(v.pass) << g;
    EXPECT_TRUE(v.failures.empty());
    EXPECT_EQ(v.report.V, 2 * g - 1);
    EXPECT_EQ(v.report.E, 4 * g - 2);
    EXPECT_EQ(v.report.F, 1);
    EXPECT_EQ(v.report.genus, g);
    EXPECT_EQ(v.report.face_effective_degrees, std::vector<int>{8 * g - 4});
    EXPECT_EQ(v.report.curve_components, 1);
    EXPECT_EQ(v.report.self_intersections, 2 * g - 1);
    for (int d : v.report.vertex_degrees) EXPECT_EQ(d, 4);
    EXPECT_NEAR(v.geodesic_length, polygeom::min_filling_length(g), 1e-12 * g);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(secs, 1.0);
}

TEST(Canonical, OrientationSearchGenus2) {
  // Over all 2^12 prime patterns, exactly the 2^6 that prime one copy of each
  // label glue to the genus-2 single-curve configuration.
  auto w = canonical_labels(2);
  int passing = 0;
  for (int mask = 0; mask < (1 << 12); ++mask) {
    for (int i = 0; i < 12; ++i) w.tokens[i].reversed = (mask >> i) & 1;
    if (!verify_word(w, 2).pass) continue;
    ++passing;
    std::map<std::string, int> primes;
    for (const auto& t : w.tokens) primes[t.label] += t.reversed;
    for (const auto& [label, count] : primes) EXPECT_EQ(count, 1) << label;
  }
  EXPECT_EQ(passing, 64);
}

TEST(Canonical, UnprimedWordFails) {
  const auto v = verify_word(canonical_labels(2), 2);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.failures.empty());
}

TEST(TraceCurve, OppositeIsInvolution) {
  const auto map = build_map(canonical_word(4));
  for (int d = 0; d < map.dart_count(); ++d) {
    EXPECT_EQ(opposite_dart(map, opposite_dart(map, d)), d);
    EXPECT_NE(opposite_dart(map, d), d);
  }
  const auto t = trace_curve(map);
  EXPECT_EQ(t.components, 1);
  EXPECT_EQ(t.self_intersections, 7);
}

TEST(TraceCurve, TwoCurvesOnTorus) {
  // Meridian and longitude of the torus cross once.
  const auto t = trace_curve(build_map(parse_gluing_word("a b a' b'")));
  EXPECT_EQ(t.components, 2);
  EXPECT_EQ(t.self_intersections, 1);
}

TEST(DiskModel, VerticesSitAtCircumradius) {
  for (int n : {5, 12, 20, 36}) {
    const auto v = polygon_vertices(n, pi / 2);
    ASSERT_EQ(static_cast<int>(v.size()), n);
    EXPECT_NEAR(std::arg(v[0]), pi / 2, 1e-15);
    for (int k = 0; k < n; ++k) {
      EXPECT_NEAR(hyperbolic_distance(0.0, v[k]), polygeom::circumradius(n, pi / 2), 1e-10);
      EXPECT_NEAR(hyperbolic_distance(v[k], v[(k + 1) % n]), polygeom::side_length(n, pi / 2), 1e-10);
    }
  }
  for (const auto& p : polygon_vertices(4, pi / 2)) EXPECT_LT(std::abs(p), 1e-7);
}

TEST(DiskModel, GeodesicCircleIsOrthogonal) {
  Point c;
  double r = 0;
  ASSERT_TRUE(geodesic_circle({0.3, 0.1}, {-0.2, 0.5}, c, r));
  EXPECT_NEAR(std::norm(c), r * r + 1.0, 1e-12);
  EXPECT_NEAR(std::abs(Point{0.3, 0.1} - c), r, 1e-12);
  EXPECT_NEAR(std::abs(Point{-0.2, 0.5} - c), r, 1e-12);
  EXPECT_FALSE(geodesic_circle({0.2, 0.2}, {-0.4, -0.4}, c, r));
}

TEST(DiskModel, Svg) {
  const auto svg = gluing_svg(canonical_word(2), pi / 2);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  for (const auto& label : canonical_word(2).labels()) EXPECT_NE(svg.find(">" + label + "<"), std::string::npos);
}

TEST(MapIo, RoundTrip) {
  const auto map = build_map(canonical_word(3));
  const auto j = map_to_json(map, 3);
  const auto back = map_from_json(j);
  EXPECT_EQ(back.alpha_array(), map.alpha_array());
  EXPECT_EQ(back.sigma_array(), map.sigma_array());
  EXPECT_EQ(genus_from_json(j), 3);
  EXPECT_FALSE(genus_from_json(map_to_json(map)).has_value());

  const auto klein = build_map(parse_gluing_word("a b a b'"));
  const auto kback = map_from_json(map_to_json(klein));
  EXPECT_EQ(kback.twisted_flags(), klein.twisted_flags());
  EXPECT_FALSE(kback.orientable());
}

TEST(MapIo, Malformed) {
  EXPECT_THROW(map_from_json(nlohmann::json{{"dart_count", 2}}), InvalidInput);
  EXPECT_THROW(map_from_json(nlohmann::json{{"dart_count", 2}, {"alpha", {0, 1}}, {"sigma", {0, 1}}}),
               InvalidInput);
  EXPECT_THROW(map_from_json(nlohmann::json{{"dart_count", 3}, {"alpha", {1, 0}}, {"sigma", {0, 1}}}),
               InvalidInput);
  EXPECT_THROW(read_json_file("/nonexistent/map.json"), InvalidInput);
}

TEST(CombinatorialMap, RejectsBadPermutations) {
  EXPECT_THROW(CombinatorialMap({1, 0}, {0, 0}), InvalidInput);
  EXPECT_THROW(CombinatorialMap({0, 1}, {0, 1}), InvalidInput);
  EXPECT_THROW(CombinatorialMap({1, 0}, {0, 1}, {true}), InvalidInput);
}
