#include <gtest/gtest.h>

#include <map>
#include <set>

#include "filling/errors.hpp"
#include "filling/map_io.hpp"
#include "filling/reducer.hpp"
#include "filling/surfmap.hpp"

using namespace filling;
using namespace filling::reducer;

namespace {

CombinatorialMap fixture(const std::string& name) {
  return map_from_json(read_json_file(std::string(FILLING_FIXTURE_DIR) + "/" + name + ".json"));
}

// Strands of a map with even valences, as dart sets closed under alpha and opposite.
std::vector<DartMask> strands(const CombinatorialMap& map) {
  const StrandMap theta(map);
  DisjointSets sets(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) {
    sets.unite(d, map.alpha(d));
    sets.unite(d, theta.opposite(d));
  }
  std::map<int, DartMask> by_root;
  for (int d = 0; d < map.dart_count(); ++d) {
    auto& m = by_root[sets.find(d)];
    m.resize(map.dart_count(), false);
    m[d] = true;
  }
  std::vector<DartMask> out;
  for (auto& [r, m] : by_root) out.push_back(m);
  return out;
}

int subgraph_euler(const CombinatorialMap& map, const DartMask& g) {
  int darts = 0;
  std::set<int> vertices;
  const auto vert = map.vertex_of();
  for (int d = 0; d < map.dart_count(); ++d) {
    if (!g[d]) continue;
    ++darts;
    vertices.insert(vert[d]);
  }
  return static_cast<int>(vertices.size()) - darts / 2;
}

}  // namespace

TEST(StrandMap, OppositeIsHalfRotation) {
  const auto map = fixture("sixvalent_g2_v5");
  const StrandMap theta(map);
  for (int d = 0; d < map.dart_count(); ++d) {
    EXPECT_EQ(theta.opposite(d), surfmap::opposite_dart(map, d));
    EXPECT_EQ(theta.opposite(theta.opposite(d)), d);
    EXPECT_EQ(theta.provenance(d), d);
  }
  EXPECT_EQ(theta.to_map().alpha_array(), map.alpha_array());
  EXPECT_EQ(theta.to_map().sigma_array(), map.sigma_array());
}

TEST(StrandMap, RejectsOddValenceAndTwists) {
  EXPECT_THROW(StrandMap(CombinatorialMap({1, 0, 3, 2}, {1, 2, 0, 3})), InvalidInput);
  EXPECT_THROW(StrandMap(surfmap::build_map(surfmap::parse_gluing_word("a b a b'"))), InvalidInput);
}

TEST(StrandMap, SubdivideEdge) {
  // Torus with meridian and longitude; put a 2-valent vertex on the edge of dart 0.
  StrandMap theta(surfmap::build_map(surfmap::parse_gluing_word("a b a' b'")));
  const int far = theta.alpha(0);
  const int x = theta.add_dart(), y = theta.add_dart();
  theta.link(0, x);
  theta.link(y, far);
  theta.make_vertex({x, y});
  theta.set_opposite(x, y);
  const auto r = surfmap::surface_report(theta.to_map());
  EXPECT_EQ(r.V, 2);
  EXPECT_EQ(r.E, 3);
  EXPECT_EQ(r.genus, 1);
  EXPECT_EQ(theta.provenance(x), -1);
  EXPECT_EQ(theta.opposite(y), x);
}

TEST(ComplementRegions, WholeMapGivesFaces) {
  const auto map = fixture("triangle_g2_v6");
  const auto split = complement_regions(map, DartMask(map.dart_count(), true));
  EXPECT_EQ(split.regions.size(), map.faces().size());
  for (const auto& r : split.regions) EXPECT_TRUE(r.disk());
}

TEST(ComplementRegions, EmptySubgraphIsTheSurface) {
  for (int g = 2; g <= 4; ++g) {
    const auto map = surfmap::build_map(surfmap::canonical_word(g));
    const auto split = complement_regions(map, DartMask(map.dart_count(), false));
    ASSERT_EQ(split.regions.size(), 1u);
    EXPECT_EQ(split.regions[0].euler, 2 - 2 * g);
    EXPECT_TRUE(split.regions[0].boundaries.empty());
  }
}

TEST(ComplementRegions, NonseparatingSimpleCurve) {
  // The first strand of this fixture is a simple closed curve that does not separate.
  const auto map = fixture("triangle_g2_v6");
  const auto theta = StrandMap(map);
  const auto c = find_cutting_curve(theta, DartMask(map.dart_count(), false));
  ASSERT_TRUE(c.has_value());
  ASSERT_EQ(c->kind, CurveKind::I);
  const auto split = complement_regions(map, curve_mask(theta, *c));
  ASSERT_EQ(split.regions.size(), 1u);
  EXPECT_EQ(split.regions[0].euler, -2);
  EXPECT_EQ(split.regions[0].boundaries.size(), 2u);
  EXPECT_FALSE(split.regions[0].disk());
}

TEST(ComplementRegions, EulerAndBoundaryBookkeeping) {
  // For every union of strands: sum of region Euler characteristics plus that of
  // the subgraph is the surface's, and every subgraph dart bounds exactly once.
  for (const std::string name : {"canonical_g3", "triangle_g2_v7", "triangle_g3_v10", "sixvalent_g2_v6"}) {
    const auto map = fixture(name);
    const int euler = surfmap::surface_report(map).euler;
    const auto parts = strands(map);
    for (unsigned mask = 0; mask < (1u << parts.size()); ++mask) {
      DartMask g(map.dart_count(), false);
      for (std::size_t i = 0; i < parts.size(); ++i)
        if (mask >> i & 1)
          for (int d = 0; d < map.dart_count(); ++d) g[d] = g[d] || parts[i][d];
      const auto split = complement_regions(map, g);
      int total = subgraph_euler(map, g);
      std::multiset<int> bounded;
      for (const auto& r : split.regions) {
        total += r.euler;
        for (const auto& w : r.boundaries) bounded.insert(w.begin(), w.end());
      }
      EXPECT_EQ(total, euler) << name << " " << mask;
      int gdarts = 0;
      for (int d = 0; d < map.dart_count(); ++d) {
        if (!g[d]) continue;
        ++gdarts;
        EXPECT_EQ(bounded.count(d), 1u) << name << " dart " << d;
      }
      EXPECT_EQ(static_cast<int>(bounded.size()), gdarts);
    }
  }
}

TEST(ComplementRegions, RejectsWrongMaskSize) {
  const auto map = fixture("canonical_g2");
  EXPECT_THROW(complement_regions(map, DartMask(3, false)), InvalidInput);
}
