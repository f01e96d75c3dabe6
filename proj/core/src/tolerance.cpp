#include "filling/tolerance.hpp"

#include <algorithm>
#include <cmath>

namespace filling {

bool Tolerance::near(double a, double b) const {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(abs, rel * scale);
}

bool Tolerance::is_zero(double a) const { return std::abs(a) <= abs; }

bool Tolerance::less_equal(double a, double b) const {
  return a <= b || near(a, b);
}

}  // namespace filling
