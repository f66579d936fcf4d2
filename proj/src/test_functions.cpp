#include "ncrs/test_functions.hpp"

#include <cmath>

namespace ncrs {

namespace detail {

double modulation(int degree, double s) {
  switch (degree) {
    case 0: return 1.0;
    case 1: return s;
    case 2: return 1.0 + 0.5 * s * s;
  }
  throw InvalidArgument("modulation degree must be 0, 1 or 2");
}

double modulation_deriv(int degree, double s) {
  switch (degree) {
    case 0: return 0.0;
    case 1: return 1.0;
    case 2: return s;
  }
  throw InvalidArgument("modulation degree must be 0, 1 or 2");
}

}  // namespace detail

double TestFunction1D::operator()(double x) const {
  const double s = (x - center) / width;
  if (std::abs(s) >= 1.0) return 0.0;
  return detail::modulation(mod_degree, s) * detail::std_bump_norm() * detail::std_bump(s) / width;
}

double TestFunction1D::deriv(double x) const {
  const double s = (x - center) / width;
  if (std::abs(s) >= 1.0) return 0.0;
  const double n = detail::std_bump_norm();
  return (detail::modulation_deriv(mod_degree, s) * n * detail::std_bump(s) +
          detail::modulation(mod_degree, s) * n * detail::std_bump_deriv(s)) /
         (width * width);
}

double TestFunction::value(double x, double t) const {
  const double sx = (x - cx) / wx;
  const double st = (t - ct) / wt;
  if (std::abs(sx) >= 1.0 || std::abs(st) >= 1.0) return 0.0;
  const double n = detail::std_bump_norm();
  return detail::modulation(mod_degree, sx) * n * detail::std_bump(sx) * n *
         detail::std_bump(st) / (wx * wt);
}

double TestFunction::dx(double x, double t) const {
  const double sx = (x - cx) / wx;
  const double st = (t - ct) / wt;
  if (std::abs(sx) >= 1.0 || std::abs(st) >= 1.0) return 0.0;
  const double n = detail::std_bump_norm();
  return (detail::modulation_deriv(mod_degree, sx) * detail::std_bump(sx) +
          detail::modulation(mod_degree, sx) * detail::std_bump_deriv(sx)) *
         n * n * detail::std_bump(st) / (wx * wx * wt);
}

double TestFunction::dt(double x, double t) const {
  const double sx = (x - cx) / wx;
  const double st = (t - ct) / wt;
  if (std::abs(sx) >= 1.0 || std::abs(st) >= 1.0) return 0.0;
  const double n = detail::std_bump_norm();
  return detail::modulation(mod_degree, sx) * detail::std_bump(sx) * n * n *
         detail::std_bump_deriv(st) / (wx * wt * wt);
}

TestFunction1D make_test_function_1d(double center, double width, int mod_degree) {
  if (!std::isfinite(center) || !(width > 0.0))
    throw InvalidArgument("test function needs finite center and positive width");
  detail::modulation(mod_degree, 0.0);  // validates the degree
  return {center, width, mod_degree};
}

TestFunction make_test_function(double cx, double wx, double ct, double wt, int mod_degree) {
  if (!std::isfinite(cx) || !(wx > 0.0) || !std::isfinite(ct) || !(wt > 0.0))
    throw InvalidArgument("test function needs finite centers and positive widths");
  detail::modulation(mod_degree, 0.0);
  return {cx, wx, ct, wt, mod_degree};
}

}  // namespace ncrs
