#include "ncrs/mollifier.hpp"

#include <cmath>

#include "ncrs/quadrature.hpp"

namespace ncrs {

namespace detail {

double std_bump(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - x * x));
}

double std_bump_deriv(double x) {
  if (std::abs(x) >= 1.0) return 0.0;
  const double d = 1.0 - x * x;
  return std::exp(-1.0 / d) * (-2.0 * x / (d * d));
}

double std_bump_norm() {
  static const double norm = [] {
    const double z = quad::adaptive([](double x) { return std_bump(x); }, -1.0, 1.0, 1e-14);
    return 1.0 / z;
  }();
  return norm;
}

}  // namespace detail

Mollifier make_mollifier(MollifierKind kind) {
  if (kind != MollifierKind::Bump) throw InvalidArgument("unknown mollifier kind");
  static const Mollifier cached = [] {
    Mollifier m;
    m.kind = MollifierKind::Bump;
    m.norm = detail::std_bump_norm();
    m.omega0 = quad::adaptive(
        [&m](double x) {
          const double w = m.norm * detail::std_bump(x);
          return w * w;
        },
        -1.0, 1.0, 1e-14);
    return m;
  }();
  return cached;
}

}  // namespace ncrs
