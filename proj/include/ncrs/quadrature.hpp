#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "ncrs/core.hpp"

// Composite Gauss-Legendre quadrature. Integrands in this project are
// piecewise smooth with known breakpoints, so fixed-order panels between
// breakpoints converge spectrally; the adaptive driver is used only where a
// tolerance is requested (mollifier normalization constants).

namespace ncrs::quad {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  explicit GaussLegendre(int n);
  int order() const { return static_cast<int>(node.size()); }
  std::vector<double> node;
  std::vector<double> weight;
};

/// Cached rule lookup (thread-safe).
const GaussLegendre& gauss_legendre(int n);

template <class F>
double panel(F&& f, double a, double b, const GaussLegendre& rule) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < rule.order(); ++i) {
    const double v = f(mid + half * rule.node[i]);
    if (!std::isfinite(v)) throw QuadratureError("non-finite integrand value");
    acc += rule.weight[i] * v;
  }
  return half * acc;
}

template <class F>
double composite(F&& f, double a, double b, const GaussLegendre& rule, int panels) {
  if (!(b > a)) return 0.0;
  double acc = 0.0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) acc += panel(f, a + i * h, a + (i + 1) * h, rule);
  return acc;
}

/// Integrates over consecutive [knots[i], knots[i+1]] segments.
template <class F>
double segments(F&& f, std::span<const double> knots, const GaussLegendre& rule,
                int panels_per_piece) {
  double acc = 0.0;
  for (size_t i = 0; i + 1 < knots.size(); ++i)
    acc += composite(f, knots[i], knots[i + 1], rule, panels_per_piece);
  return acc;
}

/// Bisection-adaptive integration to an absolute tolerance.
double adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                int max_depth = 48);

/// Least-squares slope of log(y) against log(x); x, y > 0.
double fit_loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace ncrs::quad
