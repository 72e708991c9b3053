#pragma once

#include <array>
#include <iosfwd>

namespace fillpair {

// Point of the constrained problem, ordered (x, l, theta, theta1, theta2).
struct QuadPoint {
  double x = 0.0;
  double l = 0.0;
  double theta = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

// One feasible point of the quadrilateral constraint system.
struct QuadSolution {
  double theta = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double l = 0.0;
  double x = 0.0;
  double w = 0.0;  // auxiliary geodesic splitting the quadrilateral
  double y = 0.0;
  double z = 0.0;
  double objective = 0.0;           // x + l
  std::array<double, 4> residuals{};  // g1..g4 at the solution
};

// The four constraint left-hand sides:
//   g1: the two expressions for cosh w,
//   g2: cosh l        - (cos(t/2) + cos t cos(t/2)) / (sin t sin(t/2)),
//   g3: cosh x        - (cos t2 - cos t cos t1) / (sin t sin t1),
//   g4: cosh(l/2)     - (cos t1 - cos t cos t2) / (sin t sin t2).
// Throws DomainError when a required sine vanishes or theta/2 - theta1 <= 0.
std::array<double, 4> g_residuals(const QuadPoint& p);

// Given theta in (0, pi/2): l in closed form from g2; (theta1, theta2) from
// {g1 = 0, g4 = 0} by damped Newton started at (theta/4, pi/4) with a
// nested-bisection fallback; x from g3; w, y, z from the auxiliary split.
// Throws InfeasibleThetaError when the system has no root in the angle box,
// SolverFailureError (with trace) if neither stage converges.
QuadSolution solve_at_theta(double theta);

// Minimize x(theta) + l(theta) over (0, pi/2): coarse grid scan (step 0.01)
// to locate a bracket, then golden-section refinement.
QuadSolution minimize_objective();

// 4 * minimize_objective().objective: the 12-gon is eight copies of the
// quadrilateral, total curve length 4 (x + l).
double length_bound_412();

struct LagrangeCertificate {
  QuadPoint point;
  std::array<double, 4> multipliers{};
  double gradient_residual = 0.0;    // max-norm of grad(x+l) - sum lambda_i grad g_i
  double constraint_residual = 0.0;  // max-norm of g at the point
};

// Finite-difference stationarity check (central differences, step 1e-6,
// Richardson-extrapolated).
LagrangeCertificate verify_lagrange(const QuadPoint& point,
                                    const std::array<double, 4>& multipliers);

// The exact minimum point
//   (acosh(7/2), acosh(3/2), acos(1/5), atan(2 sqrt6 / 41), atan(6 sqrt30 / 25))
// and its multipliers (70/341, 3/(5 sqrt5), 2/(3 sqrt5), 14/5).
QuadPoint optimum_point();
std::array<double, 4> optimum_multipliers();

// CSV rows "theta,theta1,theta2,l,x,objective" over the feasible part of a
// uniform grid on (0, pi/2), 12 significant digits.
void write_objective_sweep(std::ostream& out, int samples = 156);

}  // namespace fillpair
