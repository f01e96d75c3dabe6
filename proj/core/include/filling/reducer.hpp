#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "filling/combinatorial_map.hpp"

namespace filling::reducer {

/// A combinatorial map whose edges are strand segments: every dart may have an
/// `opposite` dart at its vertex through which the strand continues straight.
/// Built from a multi-curve, opposite(d) is d's rotation half-way around; the
/// vertex-split rule later leaves some darts without one (-1).
class StrandMap {
 public:
  StrandMap() = default;
  /// Throws InvalidInput if the map has an odd-valence vertex or a twisted edge.
  explicit StrandMap(const CombinatorialMap& map);

  [[nodiscard]] int dart_count() const { return static_cast<int>(alpha_.size()); }
  [[nodiscard]] int alpha(int d) const { return alpha_[d]; }
  [[nodiscard]] int sigma(int d) const { return sigma_[d]; }
  [[nodiscard]] int sigma_inv(int d) const { return sigma_inv_[d]; }
  [[nodiscard]] int opposite(int d) const { return opp_[d]; }
  /// Input dart this dart descends from, or -1 for darts made by the split rule.
  [[nodiscard]] int provenance(int d) const { return provenance_[d]; }

  [[nodiscard]] CombinatorialMap to_map() const;
  [[nodiscard]] std::vector<int> vertex_of() const;

  // Editing primitives used by the attachment step.
  int add_dart(int provenance = -1);
  void link(int a, int b);                      // make a and b the two darts of one edge
  void detach(int d);                           // remove d from its vertex rotation
  void make_vertex(const std::vector<int>& ccw);  // new vertex with this rotation
  void set_opposite(int a, int b);              // b may be -1

 private:
  std::vector<int> alpha_, sigma_, sigma_inv_, opp_, provenance_;
};

/// Subgraph as a per-dart mask; both darts of an edge carry the same flag.
using DartMask = std::vector<bool>;

struct Region {
  std::vector<int> faces;  // indices into the face list of the full map
  int euler = 0;
  /// Boundary walks: the subgraph darts traversed along each boundary component.
  std::vector<std::vector<int>> boundaries;
  [[nodiscard]] bool disk() const { return euler == 1 && boundaries.size() == 1; }
};

struct RegionSplit {
  std::vector<Region> regions;
  std::vector<int> region_of_face;
  std::vector<int> face_of_corner;  // face index of the corner at each dart
};

/// Complementary regions of a subgraph: faces of the full map glued across
/// edges outside the subgraph.
RegionSplit complement_regions(const CombinatorialMap& map, const DartMask& subgraph);

enum class CurveKind { I, II, III, IV, V, VI };

std::string to_string(CurveKind k);

struct CuttingCurve {
  /// Darts traversed in order; each is the dart the curve leaves a vertex along.
  std::vector<int> darts;
  CurveKind kind = CurveKind::I;
  bool essential = false;
  std::string witness;  // why (non-)essential, for the step log
};

/// The curve as a DartMask (both darts of each traversed edge).
DartMask curve_mask(const StrandMap& theta, const CuttingCurve& c);

/// Checks that the curve is a cutting curve for (theta, g): consecutive darts
/// continue straight, edges are distinct and outside g, the interior avoids g,
/// and the ends attach as its kind requires. Throws InvalidInput otherwise.
void check_cutting_curve(const StrandMap& theta, const DartMask& g, const CuttingCurve& c);

/// Decides essentiality and fills `essential` and `witness`: the curve is
/// boundary-parallel iff some piece of its region, cut along it, is a disk whose
/// boundary meets the old subgraph in at most one run.
bool is_essential(const StrandMap& theta, const DartMask& g, CuttingCurve& c);

/// First essential cutting curve, scanning start darts in increasing order.
/// Kinds I-IV when g is empty, V-VI otherwise. Throws InvalidInput if g already
/// fills; returns nullopt if no essential curve exists.
std::optional<CuttingCurve> find_cutting_curve(const StrandMap& theta, const DartMask& g);

struct Attachment {
  bool split_fired = false;
  std::vector<std::string> notes;
};

/// Adds the curve to g. An end whose attachment would leave a vertex of g that
/// is not 2-valent straight, 3-valent with an opposite pair, or a 4-valent
/// crossing is slid counterclockwise to the next edge of g, crossing the strands
/// in between on new vertices (the split rule).
Attachment add_cutting_curve(StrandMap& theta, DartMask& g, const CuttingCurve& c);

/// Vertex of g at `d`'s vertex is 2-valent straight, 3-valent with an opposite
/// pair, or 4-valent with two opposite pairs.
bool convex_at(const StrandMap& theta, const DartMask& g, int d);

struct FillingMap {
  CombinatorialMap map;
  int genus = 0;
};

/// Rejects: twisted or non-orientable maps, disconnected maps, odd or 2-valent
/// vertices, genus mismatch (lower genus: not filling), monogon or bigon faces,
/// contractible simple strands, and pairs of simple strands bounding an annulus.
/// Throws InvalidInput with the diagnosis.
FillingMap validate_input(const CombinatorialMap& map, int genus);

struct StepRecord {
  CurveKind kind = CurveKind::I;
  std::vector<int> darts;  // working-map darts of the curve
  std::vector<int> input_darts;  // their provenance (-1 for split darts)
  std::string witness;
  bool split_fired = false;
};

struct ReductionCertificate {
  int genus = 0;
  CombinatorialMap subgraph;       // compacted darts, straight corners flagged
  std::vector<int> provenance;     // input dart per subgraph dart, -1 if made by a split
  std::vector<int> face_degrees;   // effective degrees m_1..m_k
  int k = 0;
  int excess_sum = 0;              // sum(m_i - 4)
  int trivalent = 0, quadrivalent = 0;
  bool all_at_least_five = false;
  bool identity_holds = false;     // excess_sum == 8g - 8
  bool valence_law_holds = false;  // 4 V4 + 2 V3 == sum m_i
  bool filling = false;
  bool convex = false;
  bool split_fired = false;
  bool input_unchanged = false;    // input already satisfied the face bound
  std::vector<StepRecord> steps;

  [[nodiscard]] bool ok() const;
};

struct ReduceOptions {
  /// Return the input unchanged when it is 4-valent with every face of degree >= 5.
  bool accept_satisfying_input = true;
};

/// Throws InvariantViolation (message carries the step log) if an invariant breaks.
ReductionCertificate reduce(const FillingMap& input, const ReduceOptions& options = {});

/// Certificate checks computed from a subgraph map alone.
ReductionCertificate certify(const CombinatorialMap& subgraph, int genus);

nlohmann::json to_json(const ReductionCertificate& c);
std::string to_text(const ReductionCertificate& c);

}  // namespace filling::reducer
