#pragma once

namespace filling {

/// Shared comparison policy: absolute tolerance near zero, relative elsewhere.
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;

  /// |a - b| <= max(abs, rel * max(|a|, |b|)).
  [[nodiscard]] bool near(double a, double b) const;
  [[nodiscard]] bool is_zero(double a) const;
  /// a <= b up to the tolerance band.
  [[nodiscard]] bool less_equal(double a, double b) const;
};

inline constexpr Tolerance kDefaultTolerance{};

/// Threshold below which a polygon area (or perimeter) counts as degenerate.
inline constexpr double kDegenerateEps = 1e-9;

}  // namespace filling
