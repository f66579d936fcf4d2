#pragma once

#include "ncrs/core.hpp"
#include "ncrs/mollifier.hpp"

// Compactly supported smooth test functions for distributional pairings:
// scaled bumps with an optional polynomial modulation in x. Derivatives are
// analytic; the functions vanish identically outside their declared box.

namespace ncrs {

namespace detail {
// modulation m(s): degree 0 -> 1, degree 1 -> s, degree 2 -> 1 + s^2/2
double modulation(int degree, double s);
double modulation_deriv(int degree, double s);
}  // namespace detail

/// theta(x) = m(s) w(s) / width with s = (x - center)/width, w the unit-mass
/// standard bump.
struct TestFunction1D {
  double center = 0.0;
  double width = 1.0;
  int mod_degree = 0;

  double operator()(double x) const;
  double deriv(double x) const;
  double lo() const { return center - width; }
  double hi() const { return center + width; }
};

/// theta(x,t) = m(sx) w(sx) w(st) / (wx wt), a separable bump on the box
/// [cx - wx, cx + wx] x [ct - wt, ct + wt].
struct TestFunction {
  double cx = 0.0, wx = 1.0;
  double ct = 0.0, wt = 1.0;
  int mod_degree = 0;

  double value(double x, double t) const;
  double dx(double x, double t) const;
  double dt(double x, double t) const;
  double x_lo() const { return cx - wx; }
  double x_hi() const { return cx + wx; }
  double t_lo() const { return ct - wt; }
  double t_hi() const { return ct + wt; }
};

TestFunction1D make_test_function_1d(double center, double width, int mod_degree = 0);
TestFunction make_test_function(double cx, double wx, double ct, double wt, int mod_degree = 0);

}  // namespace ncrs
