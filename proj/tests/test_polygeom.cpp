#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "filling/errors.hpp"
#include "filling/polygeom.hpp"

using namespace filling;
using namespace filling::polygeom;
using std::numbers::pi;

namespace {

// Reference values: mpmath at 50 significant digits.
constexpr double kPerimeter12RightAngled = 19.954630692703452907829820468952872714392967455101;
constexpr double kSide12RightAngled = 1.6628858910586210756524850390794060595327472879251;
constexpr double kCircumradius12RightAngled = 1.9916523910494368240689966752859269541476674647829;
constexpr double kPerimeter7RightAngled = 10.143523058743104345225212002804087477287421097914;

constexpr double kMinLength[] = {
    9.9773153463517264539149102344764363571964837275503,
    17.274867867665954250968639229322054661387970760571,
    24.427894467049828254146797144925731419851253060092,
    31.534972857337013050222604156458386432881480825675,
    38.621488975176425506363588051983813343088261981701,
    45.697012885407655460670391414130305386611970524668,
    52.76596765546364204713529632102939345900234357011,
    59.830682130079138862029480512140857704755191608536,
    66.892499984565433242810815331240722928419440039266,
};

void expect_rel(double got, double want, double rel) {
  EXPECT_LE(std::abs(got - want), rel * std::abs(want)) << "got " << got << " want " << want;
}

}  // namespace

TEST(Polygeom, GaussBonnet) {
  EXPECT_DOUBLE_EQ(area_from_angle(5, pi / 2), pi / 2);
  EXPECT_DOUBLE_EQ(area_from_angle(12, pi / 2), 4 * pi);
  EXPECT_NEAR(area_from_angle(4, pi / 2), 0.0, 1e-15);
  EXPECT_LT(area_from_angle(3, pi / 2), 0.0);
}

TEST(Polygeom, AngleAreaRoundTrip) {
  for (int n = 3; n <= 40; ++n) {
    for (int j = 0; j < 50; ++j) {
      const double x = (n - 2) * pi * (j + 0.5) / 50;
      EXPECT_NEAR(area_from_angle(n, angle_from_area(n, x)), x, 1e-12 * (1 + x));
    }
  }
}

TEST(Polygeom, RightAngled12gon) {
  expect_rel(perimeter_from_area(12, 4 * pi), kPerimeter12RightAngled, 1e-14);
  expect_rel(perimeter_from_angle(12, pi / 2), kPerimeter12RightAngled, 1e-14);
  expect_rel(side_length(12, pi / 2), kSide12RightAngled, 1e-14);
  expect_rel(circumradius(12, pi / 2), kCircumradius12RightAngled, 1e-13);
  expect_rel(perimeter_from_angle(7, pi / 2), kPerimeter7RightAngled, 1e-14);
}

TEST(Polygeom, AngleAndAreaFormsAgree) {
  for (int n = 3; n <= 60; n += 3) {
    for (int j = 1; j < 20; ++j) {
      const double theta = (n - 2.0) * pi / n * j / 20.0;
      const double x = area_from_angle(n, theta);
      if (x <= 0) continue;
      expect_rel(perimeter_from_area(n, x), perimeter_from_angle(n, theta), 1e-12);
      expect_rel(side_length(n, theta) * n, perimeter_from_angle(n, theta), 1e-12);
    }
  }
}

TEST(Polygeom, ZeroAreaHasZeroPerimeter) {
  for (int n = 3; n <= 20; ++n) EXPECT_EQ(perimeter_from_area(n, 0.0), 0.0);
  EXPECT_NEAR(perimeter_from_angle(4, pi / 2), 0.0, 1e-7);
  // cos(pi/4 + pi/4) rounds to 6e-17 and R grows like its square root.
  EXPECT_NEAR(circumradius(4, pi / 2), 0.0, 1e-7);
}

TEST(Polygeom, SmallAreaIsEuclideanLike) {
  // Near zero area the perimeter grows like sqrt(x); P^2/x tends to 4n tan(pi/n).
  for (int n : {3, 5, 8}) {
    const double x = 1e-10;
    const double p = perimeter_from_area(n, x);
    expect_rel(p * p / x, 4 * n * std::tan(pi / n), 1e-6);
  }
}

TEST(Polygeom, DomainErrors) {
  EXPECT_THROW(perimeter_from_area(2, 0.1), DomainError);
  EXPECT_THROW(perimeter_from_area(5, -0.1), DomainError);
  EXPECT_THROW(perimeter_from_area(5, 3 * pi), DomainError);
  EXPECT_THROW(angle_from_area(2.5, 0.1), DomainError);
  EXPECT_THROW(perimeter_from_angle(3, pi / 2), DomainError);
  EXPECT_THROW(perimeter_derivative(6, 0.0), DomainError);
  EXPECT_THROW(min_filling_length(1), DomainError);
  EXPECT_THROW(kissing_lower_bound(2, 0.0), DomainError);
}

TEST(Polygeom, FirstDerivativeMatchesOracle) {
  expect_rel(perimeter_derivative(12, 4 * pi), 1.467889825013870558717887825336199376319745702603, 1e-12);
  expect_rel(perimeter_derivative(7, 3), 1.6116774327058549830152680470687980347825292782107, 1e-12);
}

TEST(Polygeom, SecondDerivativeMatchesOracle) {
  expect_rel(perimeter_second_derivative(12, 4 * pi), 0.051700269950116644385623263721290782652844679204314,
             1e-11);
  expect_rel(perimeter_second_derivative(7, 3), -0.055624189619201686475949463498839030304614068219583, 1e-11);
  expect_rel(perimeter_second_derivative(5, 0.5), -2.3983971804523617620579874660168033963841843566778, 1e-11);
}

TEST(Polygeom, DerivativesMatchFiniteDifferences) {
  for (int n = 3; n <= 30; ++n) {
    for (int j = 1; j < 10; ++j) {
      const double x = (n - 2) * pi * j / 10.0;
      const double h = 1e-5;
      const double fd1 = (perimeter_from_area(n, x + h) - perimeter_from_area(n, x - h)) / (2 * h);
      EXPECT_NEAR(perimeter_derivative(n, x), fd1, 1e-7 * (1 + std::abs(fd1))) << n << " " << x;
      const double fd2 = (perimeter_derivative(n, x + h) - perimeter_derivative(n, x - h)) / (2 * h);
      EXPECT_NEAR(perimeter_second_derivative(n, x), fd2, 1e-6 * (1 + std::abs(fd2))) << n << " " << x;
    }
  }
}

TEST(Polygeom, PerimeterIncreasesWithArea) {
  for (int n = 3; n <= 30; ++n) {
    double last = 0;
    for (int j = 1; j < 200; ++j) {
      const double p = perimeter_from_area(n, (n - 2) * pi * j / 200.0);
      EXPECT_GT(p, last);
      last = p;
    }
  }
}

TEST(Polygeom, MinFillingLength) {
  for (int g = 2; g <= 10; ++g) expect_rel(min_filling_length(g), kMinLength[g - 2], 1e-13);
  for (int g = 2; g <= 30; ++g) {
    expect_rel(min_filling_length(g), 0.5 * perimeter_from_angle(8 * g - 4, pi / 2), 1e-14);
    EXPECT_GT(min_filling_length(g + 1), min_filling_length(g));
  }
}

TEST(Polygeom, KissingLowerBound) {
  EXPECT_DOUBLE_EQ(kissing_lower_bound(2, 0.5), min_filling_length(2) / 0.5);
  EXPECT_DOUBLE_EQ(kissing_lower_bound(3, 2.0), min_filling_length(3) / 2.0);
}

TEST(Polygeom, KissingChainMargin) {
  // Margin divided by g; mpmath at log g for g = 1e4, 1e5, 1e6.
  expect_rel(kissing_chain_margin(std::log(1e4)), -0.044232132055358199473383844649271509917219646878152, 1e-10);
  expect_rel(kissing_chain_margin(std::log(1e5)), -0.028961381482886304297116520693659222100467815696647, 1e-10);
  expect_rel(kissing_chain_margin(std::log(1e6)), -0.020428293925869835397330527468899106881798358335792, 1e-10);
  EXPECT_NEAR(kissing_chain_threshold(), 8588.8115833270368963763986654775586884231682077438, 1e-6);
  EXPECT_LT(kissing_chain_margin(8588.0), 0.0);
  EXPECT_GT(kissing_chain_margin(8590.0), 0.0);
}

TEST(Polygeom, RegularPolygonSpec) {
  const auto a = RegularPolygonSpec::from_angle(12, pi / 2);
  const auto b = RegularPolygonSpec::from_area(12, 4 * pi);
  EXPECT_NEAR(a.area, b.area, 1e-14);
  EXPECT_NEAR(a.theta, b.theta, 1e-14);
  expect_rel(a.perimeter(), kPerimeter12RightAngled, 1e-14);
  expect_rel(b.side(), kSide12RightAngled, 1e-13);
  expect_rel(a.circumradius(), kCircumradius12RightAngled, 1e-13);
  EXPECT_FALSE(a.degenerate());
  EXPECT_TRUE(RegularPolygonSpec::from_area(7, 0.0).degenerate());
}

TEST(Polygeom, ExtremalReport) {
  const auto r = extremal_report(2, 1.0);
  EXPECT_EQ(r.edge_count, 12);
  expect_rel(r.min_filling_length, kMinLength[0], 1e-14);
  expect_rel(r.polygon_side, kSide12RightAngled, 1e-14);
  expect_rel(r.polygon_perimeter, kPerimeter12RightAngled, 1e-14);
  ASSERT_TRUE(r.kissing_lower_bound.has_value());
  expect_rel(*r.kissing_lower_bound, kMinLength[0], 1e-14);
  EXPECT_FALSE(extremal_report(3).kissing_lower_bound.has_value());
}
