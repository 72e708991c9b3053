#include "fillpair/hypgeom.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "fillpair/errors.hpp"
#include "fillpair/numeric.hpp"

namespace fillpair {

namespace {

void check_triangle(const AnglesTriple& t) {
  if (!(t.A > 0.0) || !(t.B > 0.0) || !(t.C > 0.0))
    throw DomainError("triangle_side: angles must be positive");
  if (!(t.A + t.B + t.C < kPi))
    throw DomainError("triangle_side: angle sum must be below pi");
}

}  // namespace

double triangle_side(const AnglesTriple& angles, Opposite opposite) {
  check_triangle(angles);
  double a = angles.A, b = angles.B, c = angles.C;
  switch (opposite) {
    case Opposite::A: break;
    case Opposite::B: std::swap(a, b); break;
    case Opposite::C: std::swap(a, c); break;
  }
  return acosh_stable((std::cos(a) + std::cos(b) * std::cos(c)) /
                      (std::sin(b) * std::sin(c)));
}

double polygon_area(std::span<const double> interior_angles) {
  const auto n = interior_angles.size();
  if (n < 3) throw DomainError("polygon_area: need at least 3 angles");
  double sum = 0.0;
  for (double a : interior_angles) sum += a;
  const double area = (static_cast<double>(n) - 2.0) * kPi - sum;
  if (!(area > 0.0)) throw DomainError("polygon_area: non-positive area");
  return area;
}

double regular_polygon_perimeter(int n, double area) {
  if (n < 3) throw DomainError("regular_polygon_perimeter: need n >= 3");
  const double max_area = (n - 2) * kPi;
  if (!(area > 0.0) || !(area < max_area))
    throw DomainError(
        "regular_polygon_perimeter: area must lie in (0, (n-2) pi)");
  const double gamma = (max_area - area) / n;  // interior angle
  const double ch = std::cos(gamma / 2.0), sh = std::sin(gamma / 2.0);
  return n * acosh_stable((std::cos(2.0 * kPi / n) + ch * ch) / (sh * sh));
}

OctagonPairState::OctagonPairState(double theta_) : theta(theta_) {
  if (!(std::abs(theta) < 2.0 * kPi))
    throw DomainError("octagon pair: |theta| must be below 2 pi");
}

std::array<double, 2> OctagonPairState::areas() const {
  return {2.0 * kPi - theta, 2.0 * kPi + theta};
}

double f8(double theta) {
  const OctagonPairState state(theta);
  const auto [a1, a2] = state.areas();
  return regular_polygon_perimeter(8, a1) + regular_polygon_perimeter(8, a2);
}

double f8_closed_form(double theta) {
  if (!(std::abs(theta) < 2.0 * kPi))
    throw DomainError("f8: |theta| must be below 2 pi");
  const double s = std::sin(theta / 8.0);
  const double r = std::sqrt(2.0) + 1.0;
  return 8.0 * acosh_stable((r - s) / (1.0 + s)) +
         8.0 * acosh_stable((r + s) / (1.0 - s));
}

double f8_derivative(double theta) {
  if (!(std::abs(theta) < 2.0 * kPi))
    throw DomainError("f8_derivative: |theta| must be below 2 pi");
  const double s = std::sin(theta / 8.0);
  const double c = std::cos(theta / 8.0);
  const double r2 = std::sqrt(2.0);
  const double k = (2.0 + r2) / std::sqrt(2.0 + 2.0 * r2);
  return k * c *
         (1.0 / ((1.0 - s) * std::sqrt(1.0 + r2 * s)) -
          1.0 / ((1.0 + s) * std::sqrt(1.0 - r2 * s)));
}

F8Minimum minimize_f8() {
  // Locate a sign change of f8' on a coarse grid.
  const double lim = 2.0 * kPi - 1e-9;
  const int grid = 64;
  double lo = -lim, hi = lim;
  double prev_x = -lim;
  double prev_d = f8_derivative(prev_x);
  for (int i = 1; i <= grid; ++i) {
    const double x = -lim + 2.0 * lim * i / grid;
    const double d = f8_derivative(x);
    if (prev_d < 0.0 && d >= 0.0) {
      lo = prev_x;
      hi = x;
      break;
    }
    prev_x = x;
    prev_d = d;
  }
  // Tighten the bracket on the derivative sign: the value of f8 is too flat
  // near the minimum to localize it from samples alone.
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (f8_derivative(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  auto m = golden_section_minimize([](double t) { return f8(t); }, lo, hi,
                                   1e-12);
  return {m.x, m.value};
}

F8Minimum minimize_f8_on(double lo, double hi) {
  if (!(lo < hi) || !(std::abs(lo) < 2.0 * kPi) || !(std::abs(hi) < 2.0 * kPi))
    throw DomainError("minimize_f8_on: need -2 pi < lo < hi < 2 pi");
  auto m = golden_section_minimize([](double t) { return f8(t); }, lo, hi,
                                   1e-10);
  return {m.x, m.value};
}

double length_bound_88() { return minimize_f8().value / 2.0; }

void write_f8_sweep(std::ostream& out, int samples) {
  if (samples < 2) throw DomainError("write_f8_sweep: need >= 2 samples");
  out << "theta,f8,fd_derivative\n";
  const double lim = 2.0 * kPi - 1e-3;
  const double fd_step = 1e-6;
  char buf[128];
  for (int i = 0; i < samples; ++i) {
    const double t = -lim + 2.0 * lim * i / (samples - 1);
    const double fd =
        central_difference([](double u) { return f8(u); }, t, fd_step);
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", t, f8(t), fd);
    out << buf;
  }
}

}  // namespace fillpair
