#include <algorithm>
#include <string>

#include "filling/errors.hpp"
#include "filling/reducer.hpp"
#include "filling/surfmap.hpp"

namespace filling::reducer {

StrandMap::StrandMap(const CombinatorialMap& map)
    : alpha_(map.alpha_array()), sigma_(map.sigma_array()) {
  if (map.has_twist()) throw InvalidInput("strand map: twisted edges are not supported");
  const int n = map.dart_count();
  sigma_inv_.resize(n);
  opp_.resize(n);
  provenance_.resize(n);
  for (int d = 0; d < n; ++d) {
    sigma_inv_[map.sigma(d)] = d;
    opp_[d] = surfmap::opposite_dart(map, d);
    provenance_[d] = d;
  }
}

CombinatorialMap StrandMap::to_map() const { return CombinatorialMap(alpha_, sigma_); }

std::vector<int> StrandMap::vertex_of() const {
  std::vector<int> v(dart_count(), -1);
  int next = 0;
  for (int d = 0; d < dart_count(); ++d) {
    if (v[d] != -1) continue;
    for (int x = d; v[x] == -1; x = sigma_[x]) v[x] = next;
    ++next;
  }
  return v;
}

int StrandMap::add_dart(int provenance) {
  const int d = dart_count();
  alpha_.push_back(d);
  sigma_.push_back(d);
  sigma_inv_.push_back(d);
  opp_.push_back(-1);
  provenance_.push_back(provenance);
  return d;
}

void StrandMap::link(int a, int b) {
  alpha_[a] = b;
  alpha_[b] = a;
}

void StrandMap::detach(int d) {
  const int before = sigma_inv_[d], after = sigma_[d];
  sigma_[before] = after;
  sigma_inv_[after] = before;
  sigma_[d] = sigma_inv_[d] = d;
}

void StrandMap::make_vertex(const std::vector<int>& ccw) {
  const int k = static_cast<int>(ccw.size());
  for (int i = 0; i < k; ++i) {
    sigma_[ccw[i]] = ccw[(i + 1) % k];
    sigma_inv_[ccw[(i + 1) % k]] = ccw[i];
  }
}

void StrandMap::set_opposite(int a, int b) {
  opp_[a] = b;
  if (b >= 0) opp_[b] = a;
}

RegionSplit complement_regions(const CombinatorialMap& map, const DartMask& subgraph) {
  if (static_cast<int>(subgraph.size()) != map.dart_count()) {
    throw InvalidInput("complement_regions: mask size differs from dart count");
  }
  RegionSplit out;
  const auto faces = map.faces();
  const int F = static_cast<int>(faces.size());
  out.face_of_corner.assign(map.dart_count(), -1);
  for (int f = 0; f < F; ++f)
    for (int c : faces[f]) out.face_of_corner[c] = f;

  // The two sides of edge {d, alpha d} are the faces holding corners d and alpha d.
  DisjointSets sets(F);
  for (int d = 0; d < map.dart_count(); ++d)
    if (!subgraph[d]) sets.unite(out.face_of_corner[d], out.face_of_corner[map.alpha(d)]);

  out.region_of_face.assign(F, -1);
  for (int f = 0; f < F; ++f) {
    const int root = sets.find(f);
    if (out.region_of_face[root] == -1) {
      out.region_of_face[root] = static_cast<int>(out.regions.size());
      out.regions.emplace_back();
    }
    out.region_of_face[f] = out.region_of_face[root];
    out.regions[out.region_of_face[f]].faces.push_back(f);
    out.regions[out.region_of_face[f]].euler += 1;
  }

  // Interior edges and vertices lower the Euler characteristic of their region.
  for (int d = 0; d < map.dart_count(); ++d)
    if (!subgraph[d] && d < map.alpha(d))
      out.regions[out.region_of_face[out.face_of_corner[d]]].euler -= 1;
  for (const auto& orbit : map.vertex_orbits()) {
    const bool interior =
        std::none_of(orbit.begin(), orbit.end(), [&](int d) { return subgraph[d]; });
    if (interior) out.regions[out.region_of_face[out.face_of_corner[orbit[0]]]].euler += 1;
  }

  // Boundary walks are the faces of the subgraph with its induced rotation.
  auto next_in_subgraph = [&](int d) {
    int x = map.sigma(d);
    while (!subgraph[x]) x = map.sigma(x);
    return x;
  };
  std::vector<bool> used(map.dart_count(), false);
  for (int g = 0; g < map.dart_count(); ++g) {
    if (!subgraph[g] || used[g]) continue;
    std::vector<int> walk;
    for (int corner = g; !used[corner];) {
      used[corner] = true;
      const int e = next_in_subgraph(corner);
      walk.push_back(e);
      corner = map.alpha(e);
    }
    out.regions[out.region_of_face[out.face_of_corner[g]]].boundaries.push_back(std::move(walk));
  }
  return out;
}

}  // namespace filling::reducer
