#pragma once

#include <optional>

namespace filling::polygeom {

// Regular hyperbolic polygons, curvature -1. Edge counts are real-valued:
// the perimeter functions are studied as functions of a continuous edge count.
// Routines that need an actual polygon check integrality at the call site.

/// Gauss-Bonnet: area of the regular n-gon with interior angle theta.
/// May be <= 0 when theta is too large for a hyperbolic polygon.
double area_from_angle(double n, double theta);

/// Interior angle of the regular n-gon of the given area, area in [0, (n-2)pi).
double angle_from_area(double n, double area);

/// Perimeter of the regular n-gon of area x, x in [0, (n-2)pi). P_n(0) = 0.
double perimeter_from_area(double n, double x);

/// Perimeter of the regular n-gon with interior angle theta.
/// Zero at n = 2pi/(pi - theta); domain error for smaller n.
double perimeter_from_angle(double n, double theta);

/// Side length of the regular n-gon with interior angle theta.
double side_length(double n, double theta);

/// d/dx perimeter_from_area(n, x) on the open interval (0, (n-2)pi).
double perimeter_derivative(double n, double x);

/// d^2/dx^2 perimeter_from_area(n, x) on (0, (n-2)pi).
double perimeter_second_derivative(double n, double x);

/// Hyperbolic distance from the centre to a vertex: cosh R = cot(pi/n) cot(theta/2).
/// Returns 0 on the zero-perimeter boundary.
double circumradius(double n, double theta);

/// Half the perimeter of the regular right-angled (8g-4)-gon: the shortest
/// possible total length of a filling multi-geodesic in genus g.
double min_filling_length(int genus);

/// min_filling_length(g) / sys: lower bound on the kissing number of a genus-g
/// surface whose systoles fill.
double kissing_lower_bound(int genus, double systole);

/// Margin of the kissing chain  L(g)/(2 log g + 2.409) - 3.525 g / log g,
/// divided by g and evaluated at g = exp(log_genus) without overflow.
double kissing_chain_margin(double log_genus);

/// Smallest log g (to ~1e-9 absolute) from which kissing_chain_margin >= 0.
double kissing_chain_threshold();

/// A regular polygon stored with both its angle and its area.
struct RegularPolygonSpec {
  double n = 0;
  double theta = 0;
  double area = 0;

  static RegularPolygonSpec from_angle(double n, double theta);
  static RegularPolygonSpec from_area(double n, double area);

  [[nodiscard]] double perimeter() const;
  [[nodiscard]] double side() const;
  [[nodiscard]] double circumradius() const;
  /// Area below kDegenerateEps.
  [[nodiscard]] bool degenerate() const;
};

struct ExtremalReport {
  int genus = 0;
  int edge_count = 0;  // 8g - 4
  double min_filling_length = 0;
  double polygon_side = 0;
  double polygon_perimeter = 0;
  std::optional<double> kissing_lower_bound;
};

ExtremalReport extremal_report(int genus, std::optional<double> systole = std::nullopt);

}  // namespace filling::polygeom
