#include <algorithm>
#include <cmath>
#include <numbers>

#include "filling/errors.hpp"
#include "filling/polygeom.hpp"
#include "filling/surfmap.hpp"

namespace filling::surfmap {

int opposite_dart(const CombinatorialMap& map, int d) {
  int deg = 1;
  for (int x = map.sigma(d); x != d; x = map.sigma(x)) ++deg;
  if (deg % 2 != 0) {
    throw InvalidInput("vertex of dart " + std::to_string(d) + " has odd valence " +
                       std::to_string(deg));
  }
  int x = d;
  for (int k = 0; k < deg / 2; ++k) x = map.sigma(x);
  return x;
}

CurveTrace trace_curve(const CombinatorialMap& map) {
  CurveTrace out;
  DisjointSets strands(map.edge_count());
  for (const auto& orbit : map.vertex_orbits()) {
    const int deg = static_cast<int>(orbit.size());
    if (deg % 2 != 0) {
      throw InvalidInput("vertex of dart " + std::to_string(orbit[0]) + " has odd valence " +
                         std::to_string(deg));
    }
    const int half = deg / 2;
    out.self_intersections += half * (half - 1) / 2;
    for (int k = 0; k < half; ++k) strands.unite(orbit[k] / 2, orbit[k + half] / 2);
  }
  // Darts 2e and 2e+1 need not share an edge in a general map; group by alpha.
  DisjointSets edges(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) edges.unite(d, map.alpha(d));
  DisjointSets curve(map.dart_count());
  for (int d = 0; d < map.dart_count(); ++d) {
    curve.unite(d, map.alpha(d));
    curve.unite(d, opposite_dart(map, d));
  }
  for (int d = 0; d < map.dart_count(); ++d)
    if (curve.find(d) == d) ++out.components;
  return out;
}

SurfaceReport surface_report(const CombinatorialMap& map) {
  if (!map.connected()) throw InvalidInput("map is disconnected");
  SurfaceReport r;
  const auto vertices = map.vertex_orbits();
  const auto faces = map.faces();
  r.V = static_cast<int>(vertices.size());
  r.E = map.edge_count();
  r.F = static_cast<int>(faces.size());
  r.euler = r.V - r.E + r.F;
  r.orientable = map.orientable();
  r.genus = r.orientable ? (2 - r.euler) / 2 : 2 - r.euler;
  for (const auto& v : vertices) r.vertex_degrees.push_back(static_cast<int>(v.size()));
  for (const auto& f : faces) {
    r.face_degrees.push_back(static_cast<int>(f.size()));
    r.face_effective_degrees.push_back(static_cast<int>(
        std::count_if(f.begin(), f.end(), [&](int c) { return !map.straight(c); })));
  }
  const bool even = std::all_of(r.vertex_degrees.begin(), r.vertex_degrees.end(),
                                [](int d) { return d % 2 == 0; });
  if (even) {
    const auto t = trace_curve(map);
    r.curve_components = t.components;
    r.self_intersections = t.self_intersections;
  }
  return r;
}

CanonicalVerification verify_word(const GluingWord& word, int genus) {
  CanonicalVerification v;
  v.genus = genus;
  auto fail = [&v](std::string why) { v.failures.push_back(std::move(why)); };
  try {
    validate_word(word);
  } catch (const InvalidInput& e) {
    fail(e.what());
    return v;
  }
  const int sides = 8 * genus - 4;
  if (static_cast<int>(word.tokens.size()) != sides) {
    fail("word has " + std::to_string(word.tokens.size()) + " sides, expected " +
         std::to_string(sides));
  }
  const auto map = build_map(word);
  v.report = surface_report(map);
  const auto& r = v.report;
  if (r.V != 2 * genus - 1) fail("V = " + std::to_string(r.V) + ", expected 2g-1");
  for (int deg : r.vertex_degrees) {
    if (deg != 4) {
      fail("vertex class with " + std::to_string(deg) + " corners");
      break;
    }
  }
  if (!r.orientable) fail("surface is non-orientable");
  if (r.genus != genus) fail("genus " + std::to_string(r.genus));
  if (r.F != 1) fail("F = " + std::to_string(r.F));
  if (r.F == 1 && r.face_effective_degrees[0] != sides) fail("face effective degree differs");
  if (r.curve_components != 1) {
    fail("curve has " + std::to_string(r.curve_components) + " components");
  }
  if (r.self_intersections != 2 * genus - 1) {
    fail(std::to_string(r.self_intersections) + " self-intersections");
  }
  if (genus >= 2) {
    v.geodesic_length = r.E * polygeom::side_length(sides, std::numbers::pi / 2.0);
    const double half = polygeom::min_filling_length(genus);
    if (std::abs(v.geodesic_length - half) > 1e-12 * half) fail("length is not half the perimeter");
  }
  v.pass = v.failures.empty();
  return v;
}

CanonicalVerification verify_canonical(int genus) {
  if (genus < 2) throw DomainError("verify_canonical: genus must be >= 2");
  return verify_word(canonical_word(genus), genus);
}

}  // namespace filling::surfmap
