#include "filling/combinatorial_map.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "filling/errors.hpp"

namespace filling {

DisjointSets::DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

int DisjointSets::find(int x) {
  while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  parent_[b] = a;
  return true;
}

CombinatorialMap::CombinatorialMap(std::vector<int> alpha, std::vector<int> sigma,
                                   std::vector<bool> straight, std::vector<bool> twisted)
    : alpha_(std::move(alpha)),
      sigma_(std::move(sigma)),
      straight_(std::move(straight)),
      twisted_(std::move(twisted)) {
  const int n = dart_count();
  if (n == 0 || n % 2 != 0) throw InvalidInput("dart count must be even and positive");
  if (static_cast<int>(sigma_.size()) != n) throw InvalidInput("sigma size differs from alpha");
  if (straight_.empty()) straight_.assign(n, false);
  if (twisted_.empty()) twisted_.assign(n, false);
  if (static_cast<int>(straight_.size()) != n || static_cast<int>(twisted_.size()) != n) {
    throw InvalidInput("flag array size differs from dart count");
  }
  sigma_inv_.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    const int a = alpha_[d], s = sigma_[d];
    if (a < 0 || a >= n || a == d || alpha_[a] != d) {
      throw InvalidInput("alpha is not a fixed-point-free involution at dart " + std::to_string(d));
    }
    if (s < 0 || s >= n || sigma_inv_[s] != -1) {
      throw InvalidInput("sigma is not a permutation at dart " + std::to_string(d));
    }
    sigma_inv_[s] = d;
    if (twisted_[d] != twisted_[a]) {
      throw InvalidInput("twist flag differs between the two darts of an edge");
    }
  }
}

bool CombinatorialMap::has_twist() const {
  return std::find(twisted_.begin(), twisted_.end(), true) != twisted_.end();
}

std::vector<int> CombinatorialMap::vertex_of() const {
  std::vector<int> v(dart_count(), -1);
  int next = 0;
  for (int d = 0; d < dart_count(); ++d) {
    if (v[d] != -1) continue;
    for (int x = d; v[x] == -1; x = sigma_[x]) v[x] = next;
    ++next;
  }
  return v;
}

std::vector<std::vector<int>> CombinatorialMap::vertex_orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(dart_count(), false);
  for (int d = 0; d < dart_count(); ++d) {
    if (seen[d]) continue;
    auto& orbit = out.emplace_back();
    for (int x = d; !seen[x]; x = sigma_[x]) {
      seen[x] = true;
      orbit.push_back(x);
    }
  }
  return out;
}

int CombinatorialMap::vertex_count() const { return static_cast<int>(vertex_orbits().size()); }

std::vector<std::vector<int>> CombinatorialMap::faces() const {
  // State: leaving along dart e with local sign s. Crossing a twisted edge flips s;
  // a negative sign walks the rotation backwards. For untwisted maps this is
  // exactly the orbit of sigma o alpha.
  std::vector<std::vector<int>> out;
  std::vector<bool> used(dart_count(), false);
  for (int c = 0; c < dart_count(); ++c) {
    if (used[c]) continue;
    auto& face = out.emplace_back();
    int e = sigma_[c];
    int s = 1;
    while (true) {
      const int a = alpha_[e];
      if (twisted_[e]) s = -s;
      const int corner = s > 0 ? a : sigma_inv_[a];
      e = s > 0 ? sigma_[a] : sigma_inv_[a];
      if (used[corner]) break;
      used[corner] = true;
      face.push_back(corner);
    }
  }
  return out;
}

bool CombinatorialMap::connected() const {
  DisjointSets sets(dart_count());
  int parts = dart_count();
  for (int d = 0; d < dart_count(); ++d) {
    parts -= sets.unite(d, alpha_[d]);
    parts -= sets.unite(d, sigma_[d]);
  }
  return parts == 1;
}

bool CombinatorialMap::orientable() const {
  // Two-colour vertices so that colour(u) xor colour(v) == twisted(edge uv).
  const auto vert = vertex_of();
  const int V = *std::max_element(vert.begin(), vert.end()) + 1;
  std::vector<int> colour(V, -1);
  std::vector<std::vector<int>> darts_at(V);
  for (int d = 0; d < dart_count(); ++d) darts_at[vert[d]].push_back(d);
  for (int root = 0; root < V; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d : darts_at[v]) {
        const int w = vert[alpha_[d]];
        const int want = colour[v] ^ static_cast<int>(twisted_[d]);
        if (colour[w] == -1) {
          colour[w] = want;
          stack.push_back(w);
        } else if (colour[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace filling
