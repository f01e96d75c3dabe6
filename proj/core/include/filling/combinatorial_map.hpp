#pragma once

#include <vector>

namespace filling {

/// Darts 0..dart_count-1 with an edge involution `alpha` and a counterclockwise
/// vertex rotation `sigma`. The corner of dart d lies between d and sigma(d);
/// `straight` marks corners of angle pi. Faces are traversed with the face on the
/// left: next(d) = sigma(alpha(d)).
///
/// Optionally an edge may be `twisted` (a signed rotation system); this is how
/// words that glue to non-orientable surfaces are represented. Maps without any
/// twisted edge are the ordinary oriented case used everywhere else.
class CombinatorialMap {
 public:
  CombinatorialMap() = default;
  /// Throws InvalidInput if alpha is not a fixed-point-free involution, sigma is not
  /// a permutation, or the optional flag arrays have the wrong size.
  CombinatorialMap(std::vector<int> alpha, std::vector<int> sigma,
                   std::vector<bool> straight = {}, std::vector<bool> twisted = {});

  [[nodiscard]] int dart_count() const { return static_cast<int>(alpha_.size()); }
  [[nodiscard]] int alpha(int d) const { return alpha_[d]; }
  [[nodiscard]] int sigma(int d) const { return sigma_[d]; }
  [[nodiscard]] int sigma_inv(int d) const { return sigma_inv_[d]; }
  [[nodiscard]] int face_next(int d) const { return sigma_[alpha_[d]]; }
  [[nodiscard]] bool straight(int d) const { return straight_[d]; }
  [[nodiscard]] bool twisted(int d) const { return twisted_[d]; }
  [[nodiscard]] bool has_twist() const;

  [[nodiscard]] const std::vector<int>& alpha_array() const { return alpha_; }
  [[nodiscard]] const std::vector<int>& sigma_array() const { return sigma_; }
  [[nodiscard]] const std::vector<bool>& straight_flags() const { return straight_; }
  [[nodiscard]] const std::vector<bool>& twisted_flags() const { return twisted_; }

  /// Vertex index of every dart; vertices numbered by their lowest dart.
  [[nodiscard]] std::vector<int> vertex_of() const;
  [[nodiscard]] std::vector<std::vector<int>> vertex_orbits() const;
  [[nodiscard]] int vertex_count() const;
  [[nodiscard]] int edge_count() const { return dart_count() / 2; }

  /// Each face as its cyclic list of corner darts. Works for twisted maps too.
  [[nodiscard]] std::vector<std::vector<int>> faces() const;

  [[nodiscard]] bool connected() const;
  /// Some choice of local orientations removes every twist.
  [[nodiscard]] bool orientable() const;

 private:
  std::vector<int> alpha_, sigma_, sigma_inv_;
  std::vector<bool> straight_, twisted_;
};

/// Union-find over 0..n-1.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int a, int b);

 private:
  std::vector<int> parent_;
};

}  // namespace filling
