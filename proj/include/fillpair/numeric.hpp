#pragma once

#include <cmath>
#include <functional>

namespace fillpair {

inline constexpr double kPi = 3.14159265358979323846;

// acosh computed via log1p so that arguments just above 1 keep full
// relative accuracy.
inline double acosh_stable(double x) {
  const double t = x - 1.0;
  return std::log1p(t + std::sqrt(t * (x + 1.0)));
}

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search on [lo, hi].  Unimodal f converges to the interior
// minimum; monotone f converges to the boundary.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f,
                                      double lo, double hi,
                                      double x_tolerance);

// Central finite difference, O(h^2).
double central_difference(const std::function<double(double)>& f, double x,
                          double h);

// Richardson-extrapolated central difference: combines steps h and h/2 for
// O(h^4) truncation error.
double richardson_difference(const std::function<double(double)>& f, double x,
                             double h);

}  // namespace fillpair
