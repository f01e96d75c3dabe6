#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "filling/polygeom.hpp"
#include "filling/report.hpp"

namespace filling::isoperim {

using polygeom::RegularPolygonSpec;

/// Excess of cutting a 4-gon of area x off an n-gon of area a:
/// P_4(x) + P_n(a - x) - P_n(a). Defined for a in [0, (n-2)pi), x in [0, min(a, 2pi)];
/// +inf at x = 2pi where the quadrilateral perimeter diverges.
double quad_split_excess(double n, double a, double x);

/// Partial derivative of quad_split_excess in x, for x in (0, min(a, 2pi)).
double quad_split_excess_dx(double n, double a, double x);

/// Sweep densities. Zero means "use the check's default".
struct GridSpec {
  int n_min = 0;
  int n_max = 0;
  int a_steps = 0;
  int x_steps = 0;
  int samples = 0;
  int instances = 0;
  std::uint64_t seed = 20240531;
  unsigned workers = 0;  // 0: hardware concurrency
  double tolerance = 1e-9;
  double angle_tolerance = 1e-12;
};

struct PolygonMember {
  int m = 0;
  double area = 0;
  [[nodiscard]] double angle() const;
  [[nodiscard]] double perimeter() const;
};

/// A family of regular polygons D_1..D_k and a target D of m edges.
struct IsoperimetricInstance {
  std::vector<PolygonMember> family;
  int target_m = 0;
  double target_area = 0;

  [[nodiscard]] double target_angle() const;
  [[nodiscard]] double target_perimeter() const;
};

enum class Mode { strict, permissive };

struct InstanceCheck {
  double lhs = 0;  // perimeter of the target
  double rhs = 0;  // total perimeter of the family
  bool holds = false;
  bool equality = false;
  /// Meaningful when `equality`: one member congruent to the target, the rest degenerate.
  bool equality_shape_ok = true;
};

/// Throws InvariantViolation when the edge or area condition fails, or when the
/// instance leaves the theorem's hypotheses in strict mode.
void validate_instance(const IsoperimetricInstance& inst, Mode mode = Mode::strict,
                       double tol = 1e-9);

InstanceCheck check_instance(const IsoperimetricInstance& inst, Mode mode = Mode::strict,
                             double tol = 1e-9);

/// True when exactly one member is congruent to the target and every other
/// member has area and perimeter below tol.
bool equality_shape(const IsoperimetricInstance& inst, double tol = 1e-9);

struct MergeSequence {
  std::vector<int> order;  // indices into the family, sorted by angle descending (stable)
  std::vector<RegularPolygonSpec> steps;
};

/// Running merge: step j has sum(m_i) - 4j + 4 edges and the partial area sum.
MergeSequence merge_sequence(const IsoperimetricInstance& inst);

/// Random instances with k <= 5, m_i in [4, 12], target angle >= pi/2.
std::vector<IsoperimetricInstance> random_instances(int count, std::uint64_t seed);

std::vector<CheckReport> verify_lemma_3_2(const GridSpec& grid = {});
std::vector<CheckReport> verify_lemma_3_3(int n, const GridSpec& grid = {});
std::vector<CheckReport> verify_lemma_3_4(int n, const GridSpec& grid = {});
std::vector<CheckReport> verify_prop_3_5(const GridSpec& grid = {});
std::vector<CheckReport> verify_prop_3_6(const GridSpec& grid = {});
std::vector<CheckReport> verify_theorem_3_1(const GridSpec& grid = {});
std::vector<CheckReport> verify_example_3_12(const GridSpec& grid = {});

/// Selector names: lemma32 lemma33 lemma34 prop35 prop36 thm31 example312, or all.
/// `n` narrows lemma33/lemma34 to one edge count. Throws std::invalid_argument
/// on an unknown selector.
std::vector<CheckReport> run_checks(const std::string& which, const GridSpec& grid = {},
                                    std::optional<int> n = std::nullopt);

const std::vector<std::string>& check_selectors();

}  // namespace filling::isoperim
