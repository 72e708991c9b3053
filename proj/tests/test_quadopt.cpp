#include <doctest.h>

#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "fillpair/errors.hpp"
#include "fillpair/hypgeom.hpp"
#include "fillpair/numeric.hpp"
#include "fillpair/quadopt.hpp"

using namespace fillpair;
using doctest::Approx;

namespace {

// Test-side oracle: bisection only, no Newton step anywhere.  theta1 comes
// from bisecting g4 in theta1 (monotone), theta2 from bisecting the sign
// change of g1 along theta2.
struct BisectionOracle {
  double theta;
  double cosh_half_l;

  explicit BisectionOracle(double theta_)
      : theta(theta_),
        cosh_half_l(std::cosh(
            0.5 * std::acosh((1 + std::cos(theta_)) / (1 - std::cos(theta_))))) {}

  std::optional<double> theta1_for(double t2) const {
    // g4(t1) is increasing in t1; bracket (0, theta/2)
    auto g4 = [&](double t1) {
      return cosh_half_l - (std::cos(t1) - std::cos(theta) * std::cos(t2)) /
                               (std::sin(theta) * std::sin(t2));
    };
    double lo = 1e-15, hi = theta / 2 - 1e-15;
    if (g4(lo) > 0.0 || g4(hi) < 0.0) return std::nullopt;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (g4(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  std::optional<double> g1_at(double t2) const {
    const auto t1 = theta1_for(t2);
    if (!t1) return std::nullopt;
    const double d = theta / 2 - *t1;
    return (-std::cos(theta) + std::cos(*t1) * std::cos(t2)) /
               (std::sin(*t1) * std::sin(t2)) -
           (std::sqrt(2.0) / 2 + std::cos(d) * std::sin(t2)) /
               (std::sin(d) * std::cos(t2));
  }

  std::optional<std::pair<double, double>> solve() const {
    const int grid = 600;
    double prev_t2 = 0.0, prev_g = 0.0;
    bool have = false;
    for (int i = 1; i < grid; ++i) {
      const double t2 = (kPi / 2) * i / grid;
      const auto g = g1_at(t2);
      if (!g) {
        have = false;
        continue;
      }
      if (have && prev_g * *g < 0.0) {
        double lo = prev_t2, hi = t2, glo = prev_g;
        for (int it = 0; it < 200; ++it) {
          const double mid = 0.5 * (lo + hi);
          const auto gm = g1_at(mid);
          if (!gm) break;
          if (glo * *gm <= 0.0) {
            hi = mid;
          } else {
            lo = mid;
            glo = *gm;
          }
        }
        const double t2r = 0.5 * (lo + hi);
        return std::make_pair(*theta1_for(t2r), t2r);
      }
      prev_t2 = t2;
      prev_g = *g;
      have = true;
    }
    return std::nullopt;
  }
};

const double kX0 = 1.92484730023841379;       // acosh(7/2)
const double kL0 = 0.962423650119206895;      // acosh(3/2)
const double kTheta0 = 1.3694384060045658;    // acos(1/5)
const double kTheta1 = 0.11892347794337454;   // atan(2 sqrt6 / 41)
const double kTheta2 = 0.92046598856943888;   // atan(6 sqrt30 / 25)

}  // namespace

TEST_CASE("constraints vanish at the exact optimum") {
  const auto g = g_residuals(optimum_point());
  for (double gi : g) CHECK(std::abs(gi) < 1e-12);
}

TEST_CASE("perturbing x moves only g3") {
  auto p = optimum_point();
  const auto base = g_residuals(p);
  p.x += 0.1;
  const auto moved = g_residuals(p);
  CHECK(std::abs(moved[0] - base[0]) < 1e-14);
  CHECK(std::abs(moved[1] - base[1]) < 1e-14);
  CHECK(std::abs(moved[3] - base[3]) < 1e-14);
  // first order: d g3 / dx = sinh x
  CHECK(moved[2] == Approx(std::sinh(kX0) * 0.1).epsilon(0.05));
}

TEST_CASE("g_residuals domain errors") {
  auto p = optimum_point();
  p.theta1 = p.theta / 2;  // theta/2 - theta1 = 0
  CHECK_THROWS_AS(g_residuals(p), DomainError);
  auto q = optimum_point();
  q.theta = 0.0;
  CHECK_THROWS_AS(g_residuals(q), DomainError);
}

TEST_CASE("solve_at_theta at the optimum angle") {
  const auto s = solve_at_theta(kTheta0);
  CHECK(s.l == Approx(kL0).epsilon(1e-9));
  CHECK(s.x == Approx(kX0).epsilon(1e-9));
  CHECK(s.theta1 == Approx(kTheta1).epsilon(1e-9));
  CHECK(s.theta2 == Approx(kTheta2).epsilon(1e-9));
  CHECK(std::cosh(s.w) == Approx(19.0 / (2.0 * std::sqrt(5.0))).epsilon(1e-9));
  CHECK(s.y == Approx(1.9754368453872251).epsilon(1e-8));
  CHECK(s.z == Approx(1.8589243063158951).epsilon(1e-8));
  for (double r : s.residuals) CHECK(std::abs(r) < 1e-10);
}

TEST_CASE("objective at theta = 1 exceeds the optimum") {
  const auto s1 = solve_at_theta(1.0);
  CHECK(s1.objective == Approx(3.270953724553214).epsilon(1e-8));
  const auto s0 = solve_at_theta(kTheta0);
  CHECK(s1.objective > s0.objective);
}

TEST_CASE("solve_at_theta rejects out-of-range theta") {
  CHECK_THROWS_AS(solve_at_theta(0.0), DomainError);
  CHECK_THROWS_AS(solve_at_theta(kPi / 2), DomainError);
  CHECK_THROWS_AS(solve_at_theta(-1.0), DomainError);
}

TEST_CASE("near the upper end of the window the system goes infeasible") {
  CHECK_THROWS_AS(solve_at_theta(1.57), InfeasibleThetaError);
}

TEST_CASE("feasibility grid: residuals and angle boxes hold") {
  for (double theta = 0.05; theta < 1.55; theta += 0.05) {
    const auto s = solve_at_theta(theta);
    for (double r : s.residuals) CHECK(std::abs(r) <= 1e-10);
    CHECK(s.theta1 > 0.0);
    CHECK(s.theta1 < theta / 2);
    CHECK(s.theta2 > 0.0);
    CHECK(s.theta2 < kPi / 2);
    CHECK(std::cosh(s.l) == Approx((1 + std::cos(theta)) / (1 - std::cos(theta)))
                                .epsilon(1e-12));
    // both cosh w expressions agree at the solution
    const double lhs = (-std::cos(theta) + std::cos(s.theta1) * std::cos(s.theta2)) /
                       (std::sin(s.theta1) * std::sin(s.theta2));
    CHECK(std::cosh(s.w) == Approx(lhs).epsilon(1e-12));
  }
}

TEST_CASE("quadrilateral closure against the polygon area kernel") {
  for (double theta = 0.1; theta < kPi / 2; theta += 0.15) {
    const std::vector<double> quad{kPi / 4, kPi / 2, kPi - theta, theta / 2};
    CHECK(polygon_area(quad) == Approx(kPi / 4 + theta / 2).epsilon(1e-12));
  }
  // the 4-gon of the pair is the regular quadrilateral with angle theta and
  // side l: its perimeter equals 4 l(theta)
  for (double theta = 0.2; theta < kPi / 2; theta += 0.2) {
    const double l =
        std::acosh((1 + std::cos(theta)) / (1 - std::cos(theta)));
    CHECK(regular_polygon_perimeter(4, 2 * kPi - 4 * theta) ==
          Approx(4.0 * l).epsilon(1e-12));
  }
}

TEST_CASE("bisection oracle agrees with the production solver") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> theta_dist(0.15, 1.5);
  int tested = 0;
  while (tested < 20) {
    const double theta = theta_dist(rng);
    const auto oracle = BisectionOracle(theta).solve();
    if (!oracle) continue;
    const auto s = solve_at_theta(theta);
    CHECK(s.theta1 == Approx(oracle->first).epsilon(1e-8));
    CHECK(s.theta2 == Approx(oracle->second).epsilon(1e-8));
    ++tested;
  }
}

TEST_CASE("objective is unimodal along the grid") {
  std::vector<double> values;
  for (double theta = 0.05; theta < 1.55; theta += 0.01)
    values.push_back(solve_at_theta(theta).objective);
  int sign_changes = 0;
  for (std::size_t i = 2; i < values.size(); ++i) {
    const double d_prev = values[i - 1] - values[i - 2];
    const double d_cur = values[i] - values[i - 1];
    if (d_prev < 0 && d_cur > 0) ++sign_changes;
    if (d_prev > 0 && d_cur < 0) ++sign_changes;  // would break unimodality
  }
  CHECK(sign_changes == 1);
}

TEST_CASE("minimize_objective recovers the exact optimum") {
  const auto s = minimize_objective();
  CHECK(s.theta == Approx(kTheta0).epsilon(1e-6));
  CHECK(s.objective == Approx(2.887270950357620685).epsilon(1e-6));
  CHECK(s.x == Approx(kX0).epsilon(1e-6));
  CHECK(s.l == Approx(kL0).epsilon(1e-6));
  CHECK(s.theta1 == Approx(kTheta1).epsilon(1e-6));
  CHECK(s.theta2 == Approx(kTheta2).epsilon(1e-6));
}

TEST_CASE("minimize_objective is deterministic") {
  const auto a = minimize_objective();
  const auto b = minimize_objective();
  CHECK(a.theta == b.theta);
  CHECK(a.objective == b.objective);
  CHECK(a.theta1 == b.theta1);
  CHECK(a.theta2 == b.theta2);
}

TEST_CASE("half-argument identity for the optimum") {
  CHECK(std::abs(std::acosh(3.5) - 2.0 * std::acosh(1.5)) < 1e-12);
}

TEST_CASE("length bound 4(x + l)") {
  CHECK(length_bound_412() == Approx(11.5490838).epsilon(1e-6));
  CHECK(length_bound_412() == Approx(6.0 * std::acosh(3.5)).epsilon(1e-9));
  CHECK(length_bound_412() < length_bound_88());
}

TEST_CASE("lagrange certificate at the printed multipliers") {
  const auto cert = verify_lagrange(optimum_point(), optimum_multipliers());
  CHECK(cert.constraint_residual <= 1e-10);
  CHECK(cert.gradient_residual <= 1e-6);
}

TEST_CASE("zero multipliers leave the raw objective gradient") {
  const auto cert = verify_lagrange(optimum_point(), {0, 0, 0, 0});
  CHECK(cert.gradient_residual == Approx(1.0).epsilon(1e-12));
  CHECK(cert.constraint_residual <= 1e-10);
}

TEST_CASE("perturbed point breaks the constraints") {
  auto p = optimum_point();
  p.theta += 1e-3;
  const auto cert = verify_lagrange(p, optimum_multipliers());
  CHECK(cert.constraint_residual > 1e-5);
}

TEST_CASE("objective sweep CSV shape") {
  std::ostringstream out;
  write_objective_sweep(out, 30);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,theta1,theta2,l,x,objective");
  int rows = 0;
  double best = 1e9;
  while (std::getline(in, line)) {
    ++rows;
    double theta, t1, t2, l, x, obj;
    CHECK(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf", &theta, &t1,
                      &t2, &l, &x, &obj) == 6);
    CHECK(obj == Approx(x + l).epsilon(1e-9));
    best = std::min(best, obj);
  }
  CHECK(rows > 20);
  CHECK(best >= 2.887270950357 - 1e-9);
}
