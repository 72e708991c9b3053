#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "fillpair/errors.hpp"
#include "fillpair/hypgeom.hpp"
#include "fillpair/numeric.hpp"

using namespace fillpair;
using doctest::Approx;

namespace {
const double kAcoshSilver = 1.5285709194809982;  // acosh(1 + sqrt 2)
}

TEST_CASE("equilateral pi/4 triangle side") {
  const AnglesTriple t{kPi / 4, kPi / 4, kPi / 4};
  for (auto which : {Opposite::A, Opposite::B, Opposite::C}) {
    CHECK(std::cosh(triangle_side(t, which)) ==
          Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("triangle of the quadrilateral split at the optimum") {
  // upper triangle has angles (pi - theta, theta1, theta2)
  const double theta = std::acos(0.2);
  const double theta1 = std::atan(2.0 * std::sqrt(6.0) / 41.0);
  const double theta2 = std::atan(6.0 * std::sqrt(30.0) / 25.0);
  const AnglesTriple t{kPi - theta, theta1, theta2};
  CHECK(std::cosh(triangle_side(t, Opposite::C)) == Approx(3.5).epsilon(1e-12));
  CHECK(std::cosh(triangle_side(t, Opposite::B)) ==
        Approx(std::sqrt(5.0) / 2.0).epsilon(1e-12));
  // side opposite theta1 is l/2 with cosh l = 3/2
  const double half_l = triangle_side(t, Opposite::B);
  CHECK(std::cosh(2.0 * half_l) == Approx(1.5).epsilon(1e-11));
}

TEST_CASE("triangle_side symmetry and monotonicity") {
  const AnglesTriple t{0.8, 0.5, 0.9};
  const AnglesTriple swapped{0.8, 0.9, 0.5};
  CHECK(triangle_side(t, Opposite::A) ==
        Approx(triangle_side(swapped, Opposite::A)).epsilon(1e-14));
  double prev = triangle_side({0.2, 0.5, 0.9}, Opposite::A);
  for (double A = 0.3; A < 1.7; A += 0.1) {
    const double side = triangle_side({A, 0.5, 0.9}, Opposite::A);
    CHECK(side < prev);
    prev = side;
  }
}

TEST_CASE("triangle_side domain errors") {
  CHECK_THROWS_AS(triangle_side({1.5, 1.5, 0.2}, Opposite::A), DomainError);
  CHECK_THROWS_AS(triangle_side({-0.1, 0.5, 0.5}, Opposite::A), DomainError);
  CHECK_THROWS_AS(triangle_side({0.0, 0.5, 0.5}, Opposite::A), DomainError);
}

TEST_CASE("regular right-angled octagon area") {
  const std::vector<double> right(8, kPi / 2);
  CHECK(polygon_area(right) == Approx(2.0 * kPi).epsilon(1e-14));
}

TEST_CASE("quadrilateral of the 12-gon split: area pi/4 + theta/2") {
  for (double theta = 0.1; theta < kPi / 2; theta += 0.2) {
    const std::vector<double> q{kPi / 4, kPi / 2, kPi - theta, theta / 2};
    CHECK(polygon_area(q) == Approx(kPi / 4 + theta / 2).epsilon(1e-12));
  }
}

TEST_CASE("degenerate polygon area") {
  const double eps = 1e-9;
  const std::vector<double> thin{kPi / 3, kPi / 3, kPi / 3 - eps};
  CHECK(polygon_area(thin) == Approx(eps).epsilon(1e-4));
  const std::vector<double> flat{kPi / 3, kPi / 3, kPi / 3};
  CHECK_THROWS_AS(polygon_area(flat), DomainError);
  CHECK_THROWS_AS(polygon_area(std::vector<double>{1.0, 1.0}), DomainError);
}

TEST_CASE("regular polygon perimeter values") {
  CHECK(regular_polygon_perimeter(8, 2.0 * kPi) ==
        Approx(8.0 * kAcoshSilver).epsilon(1e-13));
  // area pi square: interior angle pi/4, side acosh(3 + 2 sqrt 2)
  CHECK(regular_polygon_perimeter(4, kPi) ==
        Approx(9.79380979071230316).epsilon(1e-13));
  CHECK(regular_polygon_perimeter(8, 2 * kPi - 1.0) +
            regular_polygon_perimeter(8, 2 * kPi + 1.0) ==
        Approx(24.513961751078135).epsilon(1e-13));
}

TEST_CASE("regular polygon perimeter grows with area") {
  double prev = 0.0;
  for (double area = 0.5; area < 6.0 * kPi - 0.5; area += 0.25) {
    const double p = regular_polygon_perimeter(8, area);
    CHECK(p > prev);
    prev = p;
  }
}

TEST_CASE("regular polygon perimeter domain errors") {
  CHECK_THROWS_AS(regular_polygon_perimeter(2, 1.0), DomainError);
  CHECK_THROWS_AS(regular_polygon_perimeter(8, 0.0), DomainError);
  CHECK_THROWS_AS(regular_polygon_perimeter(8, 6.0 * kPi), DomainError);
  CHECK_THROWS_AS(regular_polygon_perimeter(4, 2.0 * kPi), DomainError);
}

TEST_CASE("f8 frozen values") {
  CHECK(f8(0.0) == Approx(24.45713471169597).epsilon(1e-13));
  CHECK(f8(kPi) == Approx(25.008283573309933).epsilon(1e-13));
  CHECK(f8(1.0) == Approx(24.513961751078135).epsilon(1e-13));
  CHECK_THROWS_AS(f8(2.0 * kPi), DomainError);
  CHECK_THROWS_AS(f8(-7.0), DomainError);
}

TEST_CASE("f8 symmetry") {
  for (double t = 0.1; t < 2.0 * kPi; t += 0.37) {
    CHECK(f8(t) == Approx(f8(-t)).epsilon(1e-14));
  }
}

TEST_CASE("Gauss-Bonnet route and closed form with sin(theta/8) agree") {
  for (double t = -6.2; t < 6.2; t += 0.11) {
    CHECK(std::abs(f8(t) - f8_closed_form(t)) < 1e-10);
  }
}

TEST_CASE("finite differences match the analytic f8 derivative") {
  for (double t = -6.0; t < 6.05; t += 0.25) {
    if (std::abs(t) < 0.05) continue;  // FD step would straddle the minimum
    const double fd =
        central_difference([](double u) { return f8(u); }, t, 1e-6);
    CHECK(std::abs(fd - f8_derivative(t)) < 1e-6);
  }
}

TEST_CASE("f8 stays above its value at zero") {
  const double f0 = f8(0.0);
  for (int i = 1; i <= 400; ++i) {
    const double t = -2.0 * kPi + 4.0 * kPi * i / 401.0;
    CHECK(f8(t) >= f0 - 1e-12);
  }
  // including the near-degenerate ends of the range
  for (double t : {2.0 * kPi - 1e-6, 2.0 * kPi - 1e-9}) {
    CHECK(f8(t) > f0);
    CHECK(f8(-t) > f0);
  }
}

TEST_CASE("true sign structure of f8'") {
  // the sign table of the source derivation holds on (-theta_c, theta_c)
  // with theta_c = 8 asin(sqrt(sqrt 2 - 1)); beyond it the derivative turns
  // back as the shrinking octagon's perimeter vanishes like sqrt(area)
  const double theta_c = 8.0 * std::asin(std::sqrt(std::sqrt(2.0) - 1.0));
  CHECK(theta_c == Approx(5.5934813163281902).epsilon(1e-13));
  CHECK(f8_derivative(-1.0) < 0.0);
  CHECK(f8_derivative(1.0) > 0.0);
  CHECK(f8_derivative(theta_c - 0.05) > 0.0);
  CHECK(f8_derivative(theta_c + 0.05) < 0.0);
  CHECK(f8_derivative(-theta_c - 0.05) > 0.0);
  CHECK(std::abs(f8_derivative(theta_c)) < 1e-12);
  // the limiting value at the degenerate ends equals f8(0) exactly
  CHECK(regular_polygon_perimeter(8, 4.0 * kPi) ==
        Approx(f8(0.0)).epsilon(1e-14));
}

TEST_CASE("minimize_f8 finds theta = 0") {
  const auto m = minimize_f8();
  CHECK(std::abs(m.theta) < 1e-8);
  CHECK(m.value == Approx(24.4571346).epsilon(1e-7));
}

TEST_CASE("restricted minimization hits the boundary") {
  const auto m = minimize_f8_on(1.0, 2.0);
  CHECK(m.theta == Approx(1.0).epsilon(1e-8));
  const auto neg = minimize_f8_on(-2.0, -1.0);
  CHECK(neg.theta == Approx(-1.0).epsilon(1e-8));
}

TEST_CASE("length bound for the octagon pair") {
  CHECK(length_bound_88() == Approx(12.228567).epsilon(1e-7));
  CHECK(length_bound_88() ==
        Approx(regular_polygon_perimeter(8, 2.0 * kPi)).epsilon(1e-9));
}

TEST_CASE("f8 sweep CSV shape") {
  std::ostringstream out;
  write_f8_sweep(out, 11);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,f8,fd_derivative");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    double theta, value, fd;
    CHECK(std::sscanf(line.c_str(), "%lf,%lf,%lf", &theta, &value, &fd) == 3);
    CHECK(value == Approx(f8(theta)).epsilon(1e-9));
  }
  CHECK(rows == 11);
}

TEST_CASE("octagon pair state areas") {
  const OctagonPairState s(1.3);
  const auto a = s.areas();
  CHECK(a[0] == Approx(2 * kPi - 1.3));
  CHECK(a[1] == Approx(2 * kPi + 1.3));
  CHECK(a[0] + a[1] == Approx(4 * kPi).epsilon(1e-15));
  CHECK(a[0] > 0.0);
  CHECK(a[1] > 0.0);
  CHECK_THROWS_AS(OctagonPairState(2 * kPi), DomainError);
  CHECK_THROWS_AS(OctagonPairState(-6.5), DomainError);
}
