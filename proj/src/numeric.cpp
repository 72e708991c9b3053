#include "fillpair/numeric.hpp"

namespace fillpair {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f,
                                      double lo, double hi,
                                      double x_tolerance) {
  constexpr double inv_phi = 0.6180339887498949;  // (sqrt 5 - 1) / 2
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > x_tolerance) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

double central_difference(const std::function<double(double)>& f, double x,
                          double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double richardson_difference(const std::function<double(double)>& f, double x,
                             double h) {
  const double d1 = central_difference(f, x, h);
  const double d2 = central_difference(f, x, h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace fillpair
