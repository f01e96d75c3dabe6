#include "filling/polygeom.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "filling/errors.hpp"
#include "filling/tolerance.hpp"

namespace filling::polygeom {

namespace {

using std::numbers::pi;

// arccosh arguments in [1 - kAcoshSlack, 1) are rounding noise at an exact zero.
constexpr double kAcoshSlack = 1e-12;

void require_edge_count(double n, double min_n, const char* what) {
  if (!std::isfinite(n) || n < min_n) {
    throw DomainError(std::string(what) + ": edge count " + std::to_string(n) +
                      " below " + std::to_string(min_n));
  }
}

void require_angle(double theta, const char* what) {
  if (!(theta > 0.0 && theta < pi)) {
    throw DomainError(std::string(what) + ": interior angle " + std::to_string(theta) +
                      " not in (0, pi)");
  }
}

// Perimeter as 2n * arccosh(K / s), rewritten as 2n * asinh(sqrt(K^2 - s^2) / s)
// where gap = K^2 - s^2 is supplied in a cancellation-free product form.
double perimeter_from_gap(double n, double K, double s, double gap, const char* what) {
  if (K < s * (1.0 - kAcoshSlack)) {
    throw DomainError(std::string(what) + ": cos(pi/n) < sin(theta/2), no such polygon");
  }
  if (gap <= 0.0) return 0.0;
  return 2.0 * n * std::asinh(std::sqrt(gap) / s);
}

// cos^2(pi/n) - cos^2((2pi + x)/(2n)), exact-cancellation form.
double area_gap(double n, double x) {
  return std::sin(x / (2.0 * n)) * std::sin((4.0 * pi + x) / (2.0 * n));
}

void require_open_area(double n, double x, const char* what) {
  require_edge_count(n, 2.0, what);
  if (!(x > 0.0 && x < (n - 2.0) * pi)) {
    throw DomainError(std::string(what) + ": area " + std::to_string(x) +
                      " outside the open interval (0, (n-2)pi)");
  }
}

}  // namespace

double area_from_angle(double n, double theta) {
  require_edge_count(n, 3.0, "area_from_angle");
  require_angle(theta, "area_from_angle");
  return (pi - theta) * n - 2.0 * pi;
}

double angle_from_area(double n, double area) {
  require_edge_count(n, 3.0, "angle_from_area");
  if (!(area >= 0.0 && area < (n - 2.0) * pi)) {
    throw DomainError("angle_from_area: area " + std::to_string(area) +
                      " outside [0, (n-2)pi)");
  }
  return pi - (area + 2.0 * pi) / n;
}

double perimeter_from_area(double n, double x) {
  require_edge_count(n, 2.0, "perimeter_from_area");
  if (!(x >= 0.0 && x < (n - 2.0) * pi)) {
    throw DomainError("perimeter_from_area: area " + std::to_string(x) +
                      " outside [0, (n-2)pi)");
  }
  const double K = std::cos(pi / n);
  const double s = std::sin(((n - 2.0) * pi - x) / (2.0 * n));
  return perimeter_from_gap(n, K, s, area_gap(n, x), "perimeter_from_area");
}

double perimeter_from_angle(double n, double theta) {
  require_edge_count(n, 2.0, "perimeter_from_angle");
  require_angle(theta, "perimeter_from_angle");
  const double K = std::cos(pi / n);
  const double s = std::sin(theta / 2.0);
  const double gap = std::cos(pi / n + theta / 2.0) * std::cos(pi / n - theta / 2.0);
  return perimeter_from_gap(n, K, s, gap, "perimeter_from_angle");
}

double side_length(double n, double theta) { return perimeter_from_angle(n, theta) / n; }

double perimeter_derivative(double n, double x) {
  require_open_area(n, x, "perimeter_derivative");
  const double K = std::cos(pi / n);
  const double u = (2.0 * pi + x) / (2.0 * n);
  return K * std::tan(u) / std::sqrt(area_gap(n, x));
}

double perimeter_second_derivative(double n, double x) {
  require_open_area(n, x, "perimeter_second_derivative");
  const double K = std::cos(pi / n);
  // t = ((n-2)pi - x)/(2n) = pi/2 - u, so sin t = cos u and cos t = sin u.
  const double u = (2.0 * pi + x) / (2.0 * n);
  const double s = std::cos(u);
  const double c = std::sin(u);
  const double gap = area_gap(n, x);
  return K / (2.0 * n) * (gap - s * s * c * c) / (s * s * gap * std::sqrt(gap));
}

double circumradius(double n, double theta) {
  require_edge_count(n, 2.0, "circumradius");
  require_angle(theta, "circumradius");
  // cosh R - 1 = cos(pi/n + theta/2) / (sin(pi/n) sin(theta/2))
  const double delta =
      std::cos(pi / n + theta / 2.0) / (std::sin(pi / n) * std::sin(theta / 2.0));
  if (delta < -kAcoshSlack) {
    throw DomainError("circumradius: cot(pi/n) cot(theta/2) < 1, no such polygon");
  }
  if (delta <= 0.0) return 0.0;
  return std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
}

double min_filling_length(int genus) {
  if (genus < 2) {
    throw DomainError("min_filling_length: genus " + std::to_string(genus) + " < 2");
  }
  return 0.5 * perimeter_from_angle(8.0 * genus - 4.0, pi / 2.0);
}

double kissing_lower_bound(int genus, double systole) {
  if (!(systole > 0.0) || !std::isfinite(systole)) {
    throw DomainError("kissing_lower_bound: systole must be positive");
  }
  return min_filling_length(genus) / systole;
}

double kissing_chain_margin(double log_genus) {
  if (!(log_genus > 0.0)) throw DomainError("kissing_chain_margin: log g must be positive");
  const double inv_g = std::exp(-log_genus);
  const double edges_per_genus = 8.0 - 4.0 * inv_g;  // (8g - 4) / g
  const double angle = pi * inv_g / edges_per_genus;  // pi / (8g - 4)
  const double length_per_genus =
      edges_per_genus * std::acosh(std::numbers::sqrt2 * std::cos(angle));
  return length_per_genus / (2.0 * log_genus + 2.409) - 3.525 / log_genus;
}

double kissing_chain_threshold() {
  double lo = 1.0;
  double hi = 1.0e5;
  if (kissing_chain_margin(hi) < 0.0) {
    throw InvariantViolation("kissing_chain_threshold: chain fails even at log g = 1e5");
  }
  while (hi - lo > 1e-9) {
    const double mid = 0.5 * (lo + hi);
    (kissing_chain_margin(mid) >= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

RegularPolygonSpec RegularPolygonSpec::from_angle(double n, double theta) {
  return {n, theta, area_from_angle(n, theta)};
}

RegularPolygonSpec RegularPolygonSpec::from_area(double n, double area) {
  return {n, angle_from_area(n, area), area};
}

double RegularPolygonSpec::perimeter() const { return perimeter_from_area(n, area); }

double RegularPolygonSpec::side() const { return perimeter() / n; }

double RegularPolygonSpec::circumradius() const { return polygeom::circumradius(n, theta); }

bool RegularPolygonSpec::degenerate() const { return area < kDegenerateEps; }

ExtremalReport extremal_report(int genus, std::optional<double> systole) {
  ExtremalReport r;
  r.genus = genus;
  r.min_filling_length = min_filling_length(genus);
  r.edge_count = 8 * genus - 4;
  r.polygon_perimeter = perimeter_from_angle(r.edge_count, pi / 2.0);
  r.polygon_side = r.polygon_perimeter / r.edge_count;
  if (systole) r.kissing_lower_bound = kissing_lower_bound(genus, *systole);
  return r;
}

}  // namespace filling::polygeom
