#include "ncrs/quadrature.hpp"

#include <map>
#include <mutex>

namespace ncrs::quad {

// Newton iteration on the Legendre recurrence; standard construction, exact
// to round-off for the orders used here.
GaussLegendre::GaussLegendre(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre order must be >= 1");
  node.resize(n);
  weight.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    node[i] = -x;
    node[n - 1 - i] = x;
    weight[i] = weight[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

const GaussLegendre& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
  return it->second;
}

namespace {

double adapt_rec(const std::function<double(double)>& f, double a, double b, double whole,
                 double abs_tol, int depth, const GaussLegendre& rule) {
  const double mid = 0.5 * (a + b);
  const double left = panel(f, a, mid, rule);
  const double right = panel(f, mid, b, rule);
  const double err = std::abs(left + right - whole);
  if (err < abs_tol || depth <= 0) return left + right;
  return adapt_rec(f, a, mid, left, abs_tol * 0.5, depth - 1, rule) +
         adapt_rec(f, mid, b, right, abs_tol * 0.5, depth - 1, rule);
}

}  // namespace

double adaptive(const std::function<double(double)>& f, double a, double b, double abs_tol,
                int max_depth) {
  if (!(b > a)) return 0.0;
  const GaussLegendre& rule = gauss_legendre(15);
  return adapt_rec(f, a, b, panel(f, a, b, rule), abs_tol, max_depth, rule);
}

double fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidArgument("slope fit needs two equally sized samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw InvalidArgument("slope fit requires positive samples");
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace ncrs::quad
