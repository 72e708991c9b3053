#pragma once

#include <array>
#include <iosfwd>
#include <span>

namespace fillpair {

// Interior angles of a hyperbolic triangle; requires all positive with
// A + B + C < pi.
struct AnglesTriple {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

enum class Opposite { A, B, C };

// Side length opposite the chosen angle:
//   cosh a = (cos A + cos B cos C) / (sin B sin C).
double triangle_side(const AnglesTriple& angles, Opposite opposite);

// Gauss-Bonnet area of a hyperbolic n-gon: (n-2) pi - sum of angles.
// Throws DomainError if n < 3 or the area is not positive.
double polygon_area(std::span<const double> interior_angles);

// Perimeter of the regular hyperbolic n-gon of the given area:
//   n * acosh((cos(2 pi / n) + cos^2(g/2)) / sin^2(g/2)),
// g = ((n-2) pi - area) / n the interior angle.  Requires 0 < area < (n-2) pi.
double regular_polygon_perimeter(int n, double area);

// Angle excess theta = theta1 + theta2 - theta3 - theta4 of an octagon
// pair; the two faces have Gauss-Bonnet areas 2 pi -/+ theta, positive and
// summing to 4 pi.
struct OctagonPairState {
  explicit OctagonPairState(double theta_);
  double theta;
  std::array<double, 2> areas() const;
};

// Perimeter sum of the two regular octagons of areas 2 pi - theta and
// 2 pi + theta, |theta| < 2 pi.
double f8(double theta);

// Same function through the simplified form with s = sin(theta/8):
//   8 acosh((sqrt 2 + 1 - s)/(1 + s)) + 8 acosh((sqrt 2 + 1 + s)/(1 - s)).
double f8_closed_form(double theta);

// Analytic derivative of f8.
double f8_derivative(double theta);

struct F8Minimum {
  double theta = 0.0;
  double value = 0.0;
};

// Global minimum of f8 on (-2 pi, 2 pi): derivative sign bracketing
// followed by golden-section refinement.
F8Minimum minimize_f8();

// Minimum of f8 restricted to [lo, hi] (golden section; boundary minima for
// monotone stretches).
F8Minimum minimize_f8_on(double lo, double hi);

// minimize_f8().value / 2: each arc lies on two face boundaries, so the
// perimeter sum counts the curve length twice.
double length_bound_88();

// CSV rows "theta,f8,fd_derivative" on a uniform grid over (-2 pi, 2 pi),
// 12 significant digits.
void write_f8_sweep(std::ostream& out, int samples = 401);

}  // namespace fillpair
