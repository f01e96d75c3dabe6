#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "filling/errors.hpp"
#include "filling/isoperim.hpp"
#include "filling/tolerance.hpp"

namespace filling::isoperim {

using std::numbers::pi;
namespace pg = polygeom;

double PolygonMember::angle() const { return pg::angle_from_area(m, area); }

double PolygonMember::perimeter() const { return pg::perimeter_from_area(m, area); }

double IsoperimetricInstance::target_angle() const {
  return pg::angle_from_area(target_m, target_area);
}

double IsoperimetricInstance::target_perimeter() const {
  return pg::perimeter_from_area(target_m, target_area);
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation("isoperimetric instance: " + what);
}

bool in_area_domain(int m, double area) { return area >= 0.0 && area < (m - 2.0) * pi; }

}  // namespace

void validate_instance(const IsoperimetricInstance& inst, Mode mode, double tol) {
  require(!inst.family.empty(), "empty family");
  require(inst.target_m >= 3 && in_area_domain(inst.target_m, inst.target_area),
          "target outside the area domain");
  long edge_sum = 0;
  double area_sum = 0.0;
  for (const auto& d : inst.family) {
    require(d.m >= 3 && in_area_domain(d.m, d.area),
            "member (" + std::to_string(d.m) + ", " + std::to_string(d.area) +
                ") outside the area domain");
    edge_sum += d.m;
    area_sum += d.area;
  }
  const long k = static_cast<long>(inst.family.size());
  require(inst.target_m - 4 == edge_sum - 4 * k, "edge condition m - 4 = sum(m_i) - 4k fails");
  require(std::abs(inst.target_area - area_sum) <= tol * std::max(1.0, inst.target_area),
          "area condition fails");
  if (mode == Mode::permissive) return;

  require(inst.target_angle() >= pi / 2.0 - kDefaultTolerance.abs, "target angle below pi/2");
  const bool target_degenerate = inst.target_area < kDegenerateEps;
  for (const auto& d : inst.family) {
    require(d.m >= 4, "member with fewer than 4 edges (strict mode)");
    require(target_degenerate || d.area >= kDegenerateEps,
            "degenerate member (strict mode, allowed only for a degenerate target)");
  }
}

bool equality_shape(const IsoperimetricInstance& inst, double tol) {
  const auto& fam = inst.family;
  auto degenerate = [tol](const PolygonMember& d) { return d.area < tol && d.perimeter() < tol; };
  for (std::size_t j = 0; j < fam.size(); ++j) {
    if (fam[j].m != inst.target_m || std::abs(fam[j].area - inst.target_area) >= tol) continue;
    bool rest = true;
    for (std::size_t i = 0; i < fam.size() && rest; ++i) rest = i == j || degenerate(fam[i]);
    if (rest) return true;
  }
  return false;
}

InstanceCheck check_instance(const IsoperimetricInstance& inst, Mode mode, double tol) {
  validate_instance(inst, mode, tol);
  InstanceCheck c;
  c.lhs = inst.target_perimeter();
  for (const auto& d : inst.family) c.rhs += d.perimeter();
  c.holds = c.lhs <= c.rhs + tol;
  c.equality = std::abs(c.lhs - c.rhs) < tol;
  if (c.equality) c.equality_shape_ok = equality_shape(inst, tol);
  return c;
}

MergeSequence merge_sequence(const IsoperimetricInstance& inst) {
  const auto& fam = inst.family;
  MergeSequence seq;
  seq.order.resize(fam.size());
  std::iota(seq.order.begin(), seq.order.end(), 0);
  std::vector<double> angles(fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) angles[i] = fam[i].angle();
  std::stable_sort(seq.order.begin(), seq.order.end(),
                   [&](int a, int b) { return angles[a] > angles[b]; });

  int edges = 0;
  double area = 0.0;
  for (std::size_t j = 0; j < seq.order.size(); ++j) {
    const auto& d = fam[seq.order[j]];
    edges += d.m - (j == 0 ? 0 : 4);
    area += d.area;
    if (edges < 3 || !in_area_domain(edges, area)) {
      throw InvariantViolation("merge step " + std::to_string(j + 1) +
                               " leaves the polygon domain: instance invalid");
    }
    seq.steps.push_back(RegularPolygonSpec::from_area(edges, area));
  }
  return seq;
}

std::vector<IsoperimetricInstance> random_instances(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> k_dist(1, 5), m_dist(4, 12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> weight(1.0);  // Gamma(1) gives a flat Dirichlet

  std::vector<IsoperimetricInstance> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  while (static_cast<int>(out.size()) < count) {
    IsoperimetricInstance inst;
    const int k = k_dist(rng);
    int edge_sum = 0;
    for (int i = 0; i < k; ++i) {
      inst.family.push_back({m_dist(rng), 0.0});
      edge_sum += inst.family.back().m;
    }
    inst.target_m = edge_sum - 4 * k + 4;
    if (inst.target_m <= 4) continue;  // all quadrilaterals: no right-angled target of positive area

    const double lo = pi / 2.0, hi = (inst.target_m - 2.0) * pi / inst.target_m;
    const double theta = lo + (hi - lo) * unit(rng);
    inst.target_area = pg::area_from_angle(inst.target_m, theta);
    if (!(inst.target_area > 0.0)) continue;

    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      std::vector<double> w(k);
      for (auto& v : w) v = weight(rng);
      const double total = std::accumulate(w.begin(), w.end(), 0.0);
      double assigned = 0.0;
      for (int i = 0; i + 1 < k; ++i) {
        inst.family[i].area = inst.target_area * w[i] / total;
        assigned += inst.family[i].area;
      }
      inst.family[k - 1].area = std::max(0.0, inst.target_area - assigned);
      placed = std::all_of(inst.family.begin(), inst.family.end(), [](const PolygonMember& d) {
        return in_area_domain(d.m, d.area) && d.area >= kDegenerateEps;
      });
    }
    if (placed) out.push_back(std::move(inst));
  }
  return out;
}

std::vector<CheckReport> verify_theorem_3_1(const GridSpec& grid) {
  const int count = grid.instances > 0 ? grid.instances : 10000;
  const double tol = grid.tolerance;
  const double angle_tol = grid.angle_tolerance;
  const auto instances = random_instances(count, grid.seed);

  struct Tracker {
    double value = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    void offer(double v, std::size_t i) {
      if (v < value || std::isnan(v)) value = v, index = i;
    }
  };
  Tracker margin, merge_angle, max_angle, min_angle, merge_step, final_match;
  std::size_t equalities = 0, classifier_failures = 0, rejected = 0;

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    InstanceCheck c;
    MergeSequence seq;
    try {
      c = check_instance(inst, Mode::strict, tol);
      seq = merge_sequence(inst);
    } catch (const InvariantViolation&) {
      ++rejected;
      continue;
    }
    margin.offer(c.rhs - c.lhs, i);
    if (c.equality) {
      ++equalities;
      if (!c.equality_shape_ok) ++classifier_failures;
    }
    double hi_angle = -1.0, lo_angle = 10.0;
    for (const auto& d : inst.family) {
      hi_angle = std::max(hi_angle, d.angle());
      lo_angle = std::min(lo_angle, d.angle());
    }
    max_angle.offer(hi_angle - pi / 2.0, i);
    min_angle.offer(inst.target_angle() - lo_angle, i);
    for (std::size_t j = 0; j < seq.steps.size(); ++j) {
      merge_angle.offer(seq.steps[j].theta - pi / 2.0, i);
      if (j == 0) continue;
      const auto& d = inst.family[seq.order[j]];
      merge_step.offer(seq.steps[j - 1].perimeter() + d.perimeter() - seq.steps[j].perimeter(), i);
    }
    const auto& last = seq.steps.back();
    const bool same = static_cast<int>(last.n) == inst.target_m &&
                      std::abs(last.area - inst.target_area) <= 1e-12 * std::max(1.0, last.area);
    final_match.offer(same ? 1.0 : -1.0, i);
  }

  const std::string domain = std::to_string(instances.size()) +
                             " random instances, k<=5, m_i in [4,12], target angle >= pi/2, seed " +
                             std::to_string(grid.seed);
  auto make = [&](const char* id, const Tracker& t, double threshold, double tolerance) {
    CheckReport r;
    r.id = id;
    r.domain = domain;
    r.grid_size = instances.size();
    r.min_value = t.value;
    r.argmin = {{"instance", static_cast<double>(t.index)}};
    r.tolerance = tolerance;
    r.pass = rejected == 0 && t.value >= threshold;
    return r;
  };

  std::vector<CheckReport> out;
  auto ineq = make("thm31.inequality", margin, -tol, tol);
  ineq.note("statistic", "sum perim(D_i) - perim(D)");
  ineq.note("rejected_instances", std::to_string(rejected));
  out.push_back(ineq);

  CheckReport eq;
  eq.id = "thm31.equality_classifier";
  eq.domain = domain;
  eq.grid_size = instances.size();
  eq.min_value = -static_cast<double>(classifier_failures);
  eq.tolerance = tol;
  eq.note("equality_instances", std::to_string(equalities));
  eq.note("classifier_failures", std::to_string(classifier_failures));
  eq.pass = classifier_failures == 0;
  out.push_back(eq);

  auto ma = make("thm31.merge_angles", merge_angle, -angle_tol, angle_tol);
  ma.note("statistic", "merged angle - pi/2");
  out.push_back(ma);
  auto mx = make("thm31.max_member_angle", max_angle, -angle_tol, angle_tol);
  mx.note("statistic", "max member angle - pi/2");
  out.push_back(mx);
  auto mn = make("thm31.min_member_angle", min_angle, -angle_tol, angle_tol);
  mn.note("statistic", "target angle - min member angle");
  out.push_back(mn);
  auto ms = make("thm31.merge_step", merge_step, -tol, tol);
  ms.note("statistic", "perim(merged_(j-1)) + perim(D_j) - perim(merged_j)");
  out.push_back(ms);
  auto fm = make("thm31.merge_final", final_match, 0.0, 1e-12);
  fm.note("meaning", "min_value -1 marks a final merge step that is not the target");
  out.push_back(fm);
  return out;
}

std::vector<CheckReport> verify_example_3_12(const GridSpec& grid) {
  IsoperimetricInstance inst;
  inst.family = {{6, 4.99}, {3, 0.01}};
  inst.target_m = 5;
  inst.target_area = 5.0;

  const auto c = check_instance(inst, Mode::permissive, grid.tolerance);
  const double left = c.rhs + 0.5;  // P_6(4.99) + P_3(0.01) + 1/2
  CheckReport r;
  r.id = "example312.counterexample";
  r.domain = "P_6(4.99) + P_3(0.01) + 1/2 < P_5(5), permissive mode";
  r.grid_size = 1;
  r.min_value = c.lhs - left;
  r.tolerance = grid.tolerance;
  r.note("P6(4.99)", inst.family[0].perimeter());
  r.note("P3(0.01)", inst.family[1].perimeter());
  r.note("left_side", left);
  r.note("right_side", c.lhs);
  r.note("target_angle", inst.target_angle());
  r.pass = r.min_value > grid.tolerance;

  CheckReport s;
  s.id = "example312.strict_rejects";
  s.domain = "same instance, strict mode";
  s.grid_size = 1;
  s.min_value = 1.0;
  try {
    check_instance(inst, Mode::strict, grid.tolerance);
    s.min_value = -1.0;
    s.note("diagnostic", "accepted");
  } catch (const InvariantViolation& e) {
    s.note("diagnostic", e.what());
  }
  s.pass = s.min_value > 0.0;
  return {r, s};
}

}  // namespace filling::isoperim
