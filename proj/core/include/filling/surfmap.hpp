#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "filling/combinatorial_map.hpp"

namespace filling::surfmap {

struct Token {
  std::string label;
  bool reversed = false;
  bool operator==(const Token&) const = default;
};

/// Cyclic edge-label sequence of a polygon, read clockwise.
struct GluingWord {
  std::vector<Token> tokens;

  /// Distinct labels in order of first appearance.
  [[nodiscard]] std::vector<std::string> labels() const;
  [[nodiscard]] std::string to_string() const;
  bool operator==(const GluingWord&) const = default;
};

/// Whitespace-separated `label` or `label'` tokens. Throws InvalidInput on empty
/// input or a label that does not occur exactly twice.
GluingWord parse_gluing_word(std::string_view text);

/// Throws InvalidInput unless every label occurs exactly twice.
void validate_word(const GluingWord& word);

/// Label of the edge pair with block j and index i, written "a<j>_<i>".
std::string canonical_label(int block, int index);

/// The (8g-4)-gon whose side pairing yields a genus-g surface on which the
/// polygon boundary becomes one closed curve with 2g-1 double points.
GluingWord canonical_word(int genus);

/// Same label sequence with every orientation flag cleared.
GluingWord canonical_labels(int genus);

/// Identify the sides of the polygon. Label k (first-appearance order) owns darts
/// 2k (tail end) and 2k+1 (head end); the polygon interior is one face. Words
/// that glue to a non-orientable surface produce twisted edges.
CombinatorialMap build_map(const GluingWord& word);

/// Vertex classes of the glued polygon by union-find on polygon corners, one
/// entry per corner; an independent route used to cross-check build_map.
std::vector<int> corner_classes(const GluingWord& word);

struct SurfaceReport {
  int V = 0, E = 0, F = 0;
  int euler = 0;
  /// Orientable genus, or the number of cross-caps when non-orientable.
  int genus = 0;
  bool orientable = true;
  int curve_components = 0;
  int self_intersections = 0;
  std::vector<int> face_degrees;
  std::vector<int> face_effective_degrees;
  std::vector<int> vertex_degrees;
};

struct CurveTrace {
  int components = 0;
  int self_intersections = 0;
};

/// Straight-through continuation at every vertex: the exit of dart d is the dart
/// half-way around its rotation. Throws InvalidInput on an odd-valence vertex.
CurveTrace trace_curve(const CombinatorialMap& map);

/// The dart half-way around d's vertex rotation.
int opposite_dart(const CombinatorialMap& map, int d);

/// Counts for a connected map; curve fields are filled when all valences are even.
/// Throws InvalidInput on a disconnected map.
SurfaceReport surface_report(const CombinatorialMap& map);

struct CanonicalVerification {
  int genus = 0;
  SurfaceReport report;
  double geodesic_length = 0;  // edge count times the side of the right-angled polygon
  bool pass = false;
  std::vector<std::string> failures;
};

/// Full check of a word against the genus-g construction: labels twice,
/// 2g-1 vertices of 4 corners, orientable of genus g, one face of effective
/// degree 8g-4, one curve component with 2g-1 double points, length half the perimeter.
CanonicalVerification verify_word(const GluingWord& word, int genus);

CanonicalVerification verify_canonical(int genus);

}  // namespace filling::surfmap
