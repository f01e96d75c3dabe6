#pragma once

#include <complex>
#include <string>
#include <vector>

#include "filling/surfmap.hpp"

namespace filling::surfmap {

using Point = std::complex<double>;

/// Poincare-disk distance arccosh(1 + 2|z-w|^2 / ((1-|z|^2)(1-|w|^2))).
double hyperbolic_distance(Point z, Point w);

/// Vertices of the regular n-gon centred at the origin, vertex k at Euclidean
/// radius tanh(R/2) and angle pi/2 - 2 pi k/n (clockwise). The zero-perimeter
/// boundary case returns n copies of the origin.
std::vector<Point> polygon_vertices(int n, double theta);

/// Circle through z and w orthogonal to the unit circle. Returns false when the
/// geodesic is a diameter (z, w and the origin collinear).
bool geodesic_circle(Point z, Point w, Point& centre, double& radius);

/// SVG drawing of the polygon glued by `word` with interior angle theta:
/// geodesic sides, side labels, and an arrow at each side's midpoint pointing
/// from tail to head.
std::string gluing_svg(const GluingWord& word, double theta);

}  // namespace filling::surfmap
