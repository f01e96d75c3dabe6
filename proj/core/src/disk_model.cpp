#include "filling/disk_model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "filling/errors.hpp"
#include "filling/polygeom.hpp"

namespace filling::surfmap {

using std::numbers::pi;

double hyperbolic_distance(Point z, Point w) {
  const double num = 2.0 * std::norm(z - w);
  const double den = (1.0 - std::norm(z)) * (1.0 - std::norm(w));
  if (!(den > 0.0)) throw DomainError("hyperbolic_distance: point outside the open unit disk");
  // arccosh(1 + t) = log1p(t + sqrt(t (t + 2))) keeps precision for close points.
  const double t = num / den;
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

std::vector<Point> polygon_vertices(int n, double theta) {
  if (n < 3) throw DomainError("polygon_vertices: need at least 3 vertices");
  const double r = std::tanh(polygeom::circumradius(n, theta) / 2.0);
  std::vector<Point> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) out.push_back(std::polar(r, pi / 2.0 - 2.0 * pi * k / n));
  return out;
}

bool geodesic_circle(Point z, Point w, Point& centre, double& radius) {
  // Orthogonality to the unit circle: 2 Re(z conj c) = |z|^2 + 1, same for w.
  const double a11 = 2 * z.real(), a12 = 2 * z.imag(), b1 = std::norm(z) + 1;
  const double a21 = 2 * w.real(), a22 = 2 * w.imag(), b2 = std::norm(w) + 1;
  const double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-12) return false;
  centre = {(b1 * a22 - b2 * a12) / det, (a11 * b2 - a21 * b1) / det};
  radius = std::sqrt(std::norm(centre) - 1.0);
  return true;
}

namespace {

constexpr double kSize = 640.0;
constexpr double kScale = 280.0;

struct Screen {
  double x, y;
};

Screen to_screen(Point p) { return {kSize / 2 + kScale * p.real(), kSize / 2 - kScale * p.imag()}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string gluing_svg(const GluingWord& word, double theta) {
  validate_word(word);
  const int n = static_cast<int>(word.tokens.size());
  const auto verts = polygon_vertices(n, theta);
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kSize) +
                    "\" height=\"" + fmt(kSize) + "\" viewBox=\"0 0 " + fmt(kSize) + " " +
                    fmt(kSize) + "\">\n";
  svg +=
      "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\" "
      "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"#b03020\"/></marker></defs>\n";
  svg += "<circle cx=\"" + fmt(kSize / 2) + "\" cy=\"" + fmt(kSize / 2) + "\" r=\"" + fmt(kScale) +
         "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";

  for (int i = 0; i < n; ++i) {
    const Point z = verts[i], w = verts[(i + 1) % n];
    const Screen a = to_screen(z), b = to_screen(w);
    Point centre;
    double radius = 0;
    Point mid = 0.5 * (z + w);
    Point tangent = w - z;
    std::string path = "M" + fmt(a.x) + "," + fmt(a.y) + " ";
    if (geodesic_circle(z, w, centre, radius)) {
      const Screen c = to_screen(centre);
      const double cross = (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
      path += "A" + fmt(kScale * radius) + "," + fmt(kScale * radius) + " 0 0 " +
              (cross > 0 ? "1 " : "0 ") + fmt(b.x) + "," + fmt(b.y);
      mid = centre + radius * (mid - centre) / std::abs(mid - centre);
      tangent = Point(0, 1) * (mid - centre);
      if (std::real(tangent * std::conj(w - z)) < 0) tangent = -tangent;
    } else {
      path += "L" + fmt(b.x) + "," + fmt(b.y);
    }
    svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"#203050\" stroke-width=\"2\"/>\n";

    // Arrow from the tail end towards the head end of the label.
    Point dir = tangent / std::abs(tangent);
    if (word.tokens[i].reversed) dir = -dir;
    const Screen m0 = to_screen(mid - 0.02 * dir), m1 = to_screen(mid + 0.02 * dir);
    svg += "<line x1=\"" + fmt(m0.x) + "\" y1=\"" + fmt(m0.y) + "\" x2=\"" + fmt(m1.x) +
           "\" y2=\"" + fmt(m1.y) + "\" stroke=\"#b03020\" marker-end=\"url(#head)\"/>\n";
    const Point label_at = mid * (std::abs(mid) > 1e-9 ? 1.0 + 0.08 / std::abs(mid) : 1.0);
    const Screen t = to_screen(label_at);
    svg += "<text x=\"" + fmt(t.x) + "\" y=\"" + fmt(t.y) +
           "\" font-size=\"11\" text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           word.tokens[i].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace filling::surfmap
