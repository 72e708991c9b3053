#include "fillpair/quadopt.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "fillpair/errors.hpp"
#include "fillpair/hypgeom.hpp"
#include "fillpair/numeric.hpp"

namespace fillpair {

namespace {

constexpr double kResidualTol = 1e-10;

double cosh_l_of_theta(double theta) {
  // g2 in closed form: (1 + cos t) cos(t/2) / (sin t sin(t/2)) = (1+cos t)/(1-cos t)
  return (1.0 + std::cos(theta)) / (1.0 - std::cos(theta));
}

void check_theta_range(double theta) {
  if (!(theta > 0.0) || !(theta < kPi / 2.0))
    throw DomainError("theta must lie in (0, pi/2)");
}

struct InnerSystem {
  double theta;
  double cosh_half_l;

  // the constraint values reach O(cosh(l/2)), so achievable double-precision
  // residuals scale with it
  double scale() const { return std::max(1.0, cosh_half_l); }

  // g1 as printed: difference of the two cosh w expressions
  double g1(double t1, double t2) const {
    const double s1 = std::sin(t1), s2 = std::sin(t2);
    const double d = theta / 2.0 - t1;
    const double sd = std::sin(d), c2 = std::cos(t2);
    if (s1 == 0.0 || s2 == 0.0 || c2 == 0.0)
      throw DomainError("g1: sine or cosine of a required angle vanishes");
    if (!(d > 0.0)) throw DomainError("g1: theta/2 - theta1 must be positive");
    const double lhs = (-std::cos(theta) + std::cos(t1) * std::cos(t2)) / (s1 * s2);
    const double rhs =
        (std::sqrt(2.0) / 2.0 + std::cos(d) * s2) / (sd * c2);
    return lhs - rhs;
  }

  // g4 with cosh(l/2) already known
  double g4(double t1, double t2) const {
    const double st = std::sin(theta), s2 = std::sin(t2);
    if (st == 0.0 || s2 == 0.0)
      throw DomainError("g4: sine of a required angle vanishes");
    return cosh_half_l -
           (std::cos(t1) - std::cos(theta) * std::cos(t2)) / (st * s2);
  }

  // residual pair, +inf outside the domain (for the damped line search)
  std::pair<double, double> residual(double t1, double t2) const {
    try {
      return {g1(t1, t2), g4(t1, t2)};
    } catch (const DomainError&) {
      constexpr double inf = std::numeric_limits<double>::infinity();
      return {inf, inf};
    }
  }

  // theta1 solving g4 = 0 for a given theta2, if it lands in (0, theta/2)
  std::optional<double> theta1_from_g4(double t2) const {
    const double c = cosh_half_l * std::sin(theta) * std::sin(t2) +
                     std::cos(theta) * std::cos(t2);
    if (!(c > -1.0) || !(c < 1.0)) return std::nullopt;
    const double t1 = std::acos(c);
    if (!(t1 > 0.0) || !(t1 < theta / 2.0)) return std::nullopt;
    return t1;
  }
};

double norm_inf(const std::pair<double, double>& r) {
  return std::max(std::abs(r.first), std::abs(r.second));
}

struct InnerRoot {
  double t1;
  double t2;
};

std::optional<InnerRoot> newton_solve(const InnerSystem& sys,
                                      std::ostream& trace) {
  double t1 = sys.theta / 4.0, t2 = kPi / 4.0;
  const double t1_hi = sys.theta / 2.0, t2_hi = kPi / 2.0;
  const double margin = 1e-12;
  auto clamp = [&](double& a, double& b) {
    a = std::clamp(a, margin, t1_hi - margin);
    b = std::clamp(b, margin, t2_hi - margin);
  };
  clamp(t1, t2);
  auto r = sys.residual(t1, t2);
  const double accept = 1e-13 * sys.scale();
  for (int iter = 0; iter < 60; ++iter) {
    if (norm_inf(r) < accept) return InnerRoot{t1, t2};
    const double h1 = 1e-7 * std::max(1.0, std::abs(t1));
    const double h2 = 1e-7 * std::max(1.0, std::abs(t2));
    const auto rp1 = sys.residual(t1 + h1, t2);
    const auto rm1 = sys.residual(t1 - h1, t2);
    const auto rp2 = sys.residual(t1, t2 + h2);
    const auto rm2 = sys.residual(t1, t2 - h2);
    const double j11 = (rp1.first - rm1.first) / (2 * h1);
    const double j12 = (rp2.first - rm2.first) / (2 * h2);
    const double j21 = (rp1.second - rm1.second) / (2 * h1);
    const double j22 = (rp2.second - rm2.second) / (2 * h2);
    const double det = j11 * j22 - j12 * j21;
    if (!std::isfinite(det) || det == 0.0) {
      trace << "newton: singular or non-finite jacobian at iter " << iter
            << "\n";
      return std::nullopt;
    }
    const double dx1 = (r.first * j22 - r.second * j12) / det;
    const double dx2 = (j11 * r.second - j21 * r.first) / det;
    // damping: halve the step until the residual norm drops
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving) {
      double n1 = t1 - lambda * dx1, n2 = t2 - lambda * dx2;
      clamp(n1, n2);
      const auto rn = sys.residual(n1, n2);
      if (norm_inf(rn) < norm_inf(r)) {
        t1 = n1;
        t2 = n2;
        r = rn;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    if (!accepted) {
      trace << "newton: line search stalled at iter " << iter << " (residual "
            << norm_inf(r) << ")\n";
      return std::nullopt;
    }
  }
  if (norm_inf(r) < accept) return InnerRoot{t1, t2};
  trace << "newton: no convergence after 60 iterations (residual "
        << norm_inf(r) << ")\n";
  return std::nullopt;
}

// Nested bracket: theta1 from g4 in closed form, outer bisection on the
// sign change of g1 along theta2.  The set of theta2 with theta1 in
// (0, theta/2) is found analytically: with c(t2) = cosh(l/2) sin t sin t2 +
// cos t cos t2 = R cos(t2 - phi), theta1 = acos(c) lies in the box exactly
// where cos(theta/2) < c < 1, giving up to two windows around phi.
std::optional<InnerRoot> bisection_solve(const InnerSystem& sys,
                                         std::ostream& trace) {
  const double theta = sys.theta;
  const double A = std::cos(theta);
  const double B = sys.cosh_half_l * std::sin(theta);
  const double R = std::hypot(A, B);
  const double phi = std::atan2(B, A);
  const double lim = kPi / 2.0;

  auto h_value = [&](double t2) -> std::optional<double> {
    const auto t1 = sys.theta1_from_g4(t2);
    if (!t1) return std::nullopt;
    try {
      return sys.g1(*t1, t2);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  };

  // window edges where theta1 hits theta/2 (c = cos(theta/2)) and 0 (c = 1)
  const double spread_outer = std::acos(std::min(1.0, std::cos(theta / 2.0) / R));
  const double spread_inner = std::acos(std::min(1.0, 1.0 / R));
  const std::pair<double, double> windows[2] = {
      {phi - spread_outer, phi - spread_inner},   // theta1 falls theta/2 -> 0
      {phi + spread_inner, phi + spread_outer}};  // theta1 rises 0 -> theta/2

  for (const auto& [raw_lo, raw_hi] : windows) {
    const double lo = std::max(raw_lo, 0.0), hi = std::min(raw_hi, lim);
    if (!(hi > lo)) continue;
    const double pad = (hi - lo) * 1e-9;
    // dense scan inside the window for a sign change
    const int grid = 512;
    double prev_t2 = 0.0, prev_h = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= grid; ++i) {
      const double t2 = (lo + pad) + (hi - lo - 2 * pad) * i / grid;
      const auto h = h_value(t2);
      if (!h) {
        have_prev = false;
        continue;
      }
      if (have_prev && prev_h * *h < 0.0) {
        double a = prev_t2, b = t2, ha = prev_h;
        for (int it = 0; it < 200 && b - a > 1e-17; ++it) {
          const double m = 0.5 * (a + b);
          const auto hm = h_value(m);
          if (!hm) break;
          if (ha * *hm <= 0.0) {
            b = m;
          } else {
            a = m;
            ha = *hm;
          }
        }
        const double t2r = 0.5 * (a + b);
        const auto hr = h_value(t2r);
        if (hr && std::abs(*hr) < 1e-8 * sys.scale()) {
          if (const auto t1r = sys.theta1_from_g4(t2r))
            return InnerRoot{*t1r, t2r};
        }
      }
      prev_t2 = t2;
      prev_h = *h;
      have_prev = true;
    }
  }
  trace << "bisection: no sign change of g1 inside the feasible theta2 "
           "windows\n";
  return std::nullopt;
}

}  // namespace

std::array<double, 4> g_residuals(const QuadPoint& p) {
  const double st = std::sin(p.theta);
  const double sh = std::sin(p.theta / 2.0);
  const double s1 = std::sin(p.theta1);
  const double s2 = std::sin(p.theta2);
  const double c2 = std::cos(p.theta2);
  const double d = p.theta / 2.0 - p.theta1;
  if (!(d > 0.0))
    throw DomainError("g_residuals: theta/2 - theta1 must be positive");
  if (st == 0.0 || sh == 0.0 || s1 == 0.0 || s2 == 0.0 || c2 == 0.0 ||
      std::sin(d) == 0.0)
    throw DomainError("g_residuals: sine or cosine of a required angle vanishes");

  const double g1 =
      (-std::cos(p.theta) + std::cos(p.theta1) * std::cos(p.theta2)) /
          (s1 * s2) -
      (std::sqrt(2.0) / 2.0 + std::cos(d) * s2) / (std::sin(d) * c2);
  const double g2 =
      std::cosh(p.l) -
      (std::cos(p.theta / 2.0) + std::cos(p.theta) * std::cos(p.theta / 2.0)) /
          (st * sh);
  const double g3 = std::cosh(p.x) -
                    (std::cos(p.theta2) - std::cos(p.theta) * std::cos(p.theta1)) /
                        (st * s1);
  const double g4 = std::cosh(p.l / 2.0) -
                    (std::cos(p.theta1) - std::cos(p.theta) * std::cos(p.theta2)) /
                        (st * s2);
  return {g1, g2, g3, g4};
}

QuadSolution solve_at_theta(double theta) {
  check_theta_range(theta);
  const double l = acosh_stable(cosh_l_of_theta(theta));
  InnerSystem sys{theta, std::cosh(l / 2.0)};

  std::ostringstream trace;
  auto root = newton_solve(sys, trace);
  if (!root) root = bisection_solve(sys, trace);
  if (!root)
    throw InfeasibleThetaError(
        "solve_at_theta: no root in the angle box at theta=" +
        std::to_string(theta));
  if (norm_inf(sys.residual(root->t1, root->t2)) > kResidualTol * sys.scale())
    throw SolverFailureError(
        "solve_at_theta: solver did not reach tolerance at theta=" +
            std::to_string(theta),
        trace.str());

  const double t1 = root->t1, t2 = root->t2;
  const double x_arg = (std::cos(t2) - std::cos(theta) * std::cos(t1)) /
                       (std::sin(theta) * std::sin(t1));
  if (!(x_arg >= 1.0))
    throw InfeasibleThetaError(
        "solve_at_theta: degenerate x side at theta=" + std::to_string(theta));

  QuadSolution s;
  s.theta = theta;
  s.theta1 = t1;
  s.theta2 = t2;
  s.l = l;
  s.x = acosh_stable(x_arg);
  s.w = acosh_stable((-std::cos(theta) + std::cos(t1) * std::cos(t2)) /
                     (std::sin(t1) * std::sin(t2)));
  // lower triangle of the auxiliary split: angles {pi/4, theta/2 - theta1,
  // pi/2 - theta2}; y opposite pi/2 - theta2, z opposite theta/2 - theta1
  const AnglesTriple lower{kPi / 4.0, theta / 2.0 - t1, kPi / 2.0 - t2};
  s.y = triangle_side(lower, Opposite::C);
  s.z = triangle_side(lower, Opposite::B);
  s.objective = s.x + s.l;
  s.residuals = g_residuals({s.x, s.l, s.theta, s.theta1, s.theta2});
  return s;
}

QuadSolution minimize_objective() {
  const double step = 0.01;
  std::vector<std::pair<double, double>> feasible;  // (theta, objective)
  for (int i = 1; i * step < kPi / 2.0; ++i) {
    const double theta = i * step;
    try {
      feasible.emplace_back(theta, solve_at_theta(theta).objective);
    } catch (const InfeasibleThetaError&) {
    } catch (const DomainError&) {
    }
  }
  if (feasible.empty())
    throw SolverFailureError("minimize_objective: no feasible theta on grid",
                             "");
  std::size_t best = 0;
  for (std::size_t i = 1; i < feasible.size(); ++i)
    if (feasible[i].second < feasible[best].second) best = i;

  const double center = feasible[best].first;
  auto guarded = [](double theta) {
    try {
      return solve_at_theta(theta).objective;
    } catch (const Error&) {
      return std::numeric_limits<double>::infinity();
    }
  };
  const auto m = golden_section_minimize(
      guarded, center - step, center + step, 1e-9);
  return solve_at_theta(m.x);
}

double length_bound_412() {
  static const double cached = 4.0 * minimize_objective().objective;
  return cached;
}

LagrangeCertificate verify_lagrange(const QuadPoint& point,
                                    const std::array<double, 4>& multipliers) {
  constexpr double fd_step = 1e-6;
  const std::array<double, 5> coords{point.x, point.l, point.theta,
                                     point.theta1, point.theta2};
  auto eval = [&](const std::array<double, 5>& c) {
    return g_residuals({c[0], c[1], c[2], c[3], c[4]});
  };

  // gradient of f = x + l is (1,1,0,0,0)
  std::array<double, 5> residual{1.0, 1.0, 0.0, 0.0, 0.0};
  for (int k = 0; k < 5; ++k) {
    for (int i = 0; i < 4; ++i) {
      auto gi_of_coord = [&](double v) {
        auto c = coords;
        c[static_cast<std::size_t>(k)] = v;
        return eval(c)[static_cast<std::size_t>(i)];
      };
      const double dgi =
          richardson_difference(gi_of_coord, coords[static_cast<std::size_t>(k)], fd_step);
      residual[static_cast<std::size_t>(k)] -= multipliers[static_cast<std::size_t>(i)] * dgi;
    }
  }

  LagrangeCertificate cert;
  cert.point = point;
  cert.multipliers = multipliers;
  cert.gradient_residual = 0.0;
  for (double r : residual)
    cert.gradient_residual = std::max(cert.gradient_residual, std::abs(r));
  const auto g = eval(coords);
  cert.constraint_residual = 0.0;
  for (double gi : g)
    cert.constraint_residual = std::max(cert.constraint_residual, std::abs(gi));
  return cert;
}

QuadPoint optimum_point() {
  return {acosh_stable(3.5), acosh_stable(1.5), std::acos(0.2),
          std::atan(2.0 * std::sqrt(6.0) / 41.0),
          std::atan(6.0 * std::sqrt(30.0) / 25.0)};
}

std::array<double, 4> optimum_multipliers() {
  return {70.0 / 341.0, 3.0 / (5.0 * std::sqrt(5.0)),
          2.0 / (3.0 * std::sqrt(5.0)), 14.0 / 5.0};
}

void write_objective_sweep(std::ostream& out, int samples) {
  if (samples < 2) throw DomainError("write_objective_sweep: need >= 2 samples");
  out << "theta,theta1,theta2,l,x,objective\n";
  char buf[192];
  for (int i = 1; i <= samples; ++i) {
    const double theta = (kPi / 2.0) * i / (samples + 1);
    try {
      const QuadSolution s = solve_at_theta(theta);
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n",
                    s.theta, s.theta1, s.theta2, s.l, s.x, s.objective);
      out << buf;
    } catch (const Error&) {
      // infeasible grid point: skipped row
    }
  }
}

}  // namespace fillpair
