#include "ncrs/identity_verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ncrs/quadrature.hpp"

namespace ncrs {

namespace {

// t-knots: uniform panels plus the instants where the front crosses the
// theta box edges (the clamped inner integral has kinks there). A fast front
// compresses the along-front factor theta(phi(t), t) to a t-width of
// wx / |s|, so the panel count tracks that feature size.
std::vector<double> t_knots(const DeltaShockSolution& sol, const TestFunction& th, int panels) {
  const double lo = std::max(0.0, th.t_lo());
  const double hi = th.t_hi();
  const double feature = std::min(th.wt, th.wx / std::max(std::abs(sol.s), 0.25));
  const int n = std::clamp<int>(static_cast<int>(std::ceil((hi - lo) / feature * 12.0)), panels,
                                800);
  std::vector<double> k;
  for (int i = 0; i <= n; ++i) k.push_back(lo + (hi - lo) * i / n);
  if (sol.s != 0.0) {
    for (double edge : {th.x_lo(), th.x_hi()}) {
      const double tc = edge / sol.s;
      if (tc > lo && tc < hi) k.push_back(tc);
    }
  }
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

}  // namespace

IdentityResidualPair identity_residuals(const DeltaShockSolution& sol, const TestFunction& theta,
                                        const IdentityQuadSpec& spec) {
  ensure_valid(sol.data);
  const double t_lo = std::max(0.0, theta.t_lo());
  const double t_hi = theta.t_hi();
  if (!(t_hi > t_lo)) return {0.0, 0.0};

  const auto& rule = quad::gauss_legendre(spec.order);
  const State& L = sol.data.left;
  const State& R = sol.data.right;
  const double flux_l = 0.5 * L.u * L.u - L.sigma;
  const double flux_r = 0.5 * R.u * R.u - R.sigma;
  const HeavisideForm h = to_heaviside_form(sol.data);

  const double xl = theta.x_lo();
  const double xr = theta.x_hi();

  // inner x-integral of identity (1) at fixed t, split at the front
  auto inner1 = [&](double t) {
    const double xf = std::clamp(sol.front(t), xl, xr);
    double acc = 0.0;
    if (xf > xl)
      acc += L.u * quad::composite([&](double x) { return theta.dt(x, t); }, xl, xf, rule,
                                   spec.x_panels);
    if (xr > xf)
      acc += R.u * quad::composite([&](double x) { return theta.dt(x, t); }, xf, xr, rule,
                                   spec.x_panels);
    // theta_x integrates exactly in x on each side
    acc += flux_l * (theta.value(xf, t) - theta.value(xl, t));
    acc += flux_r * (theta.value(xr, t) - theta.value(xf, t));
    return acc;
  };

  // identity (2), both parts as line integrals along the front
  auto inner2 = [&](double t) {
    const double xf = sol.front(t);
    const double transport = h.sigma1 * sol.s - h.sigma1 * (h.u0 + 0.5 * h.u1);
    const double along = theta.dt(xf, t) + sol.s * theta.dx(xf, t);
    return transport * theta.value(xf, t) - sol.amplitude(t) * along;
  };

  double vol1 = 0.0, line2 = 0.0;
  const std::vector<double> knots = t_knots(sol, theta, spec.t_panels);
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    vol1 += quad::panel(inner1, knots[i], knots[i + 1], rule);
    line2 += quad::panel(inner2, knots[i], knots[i + 1], rule);
  }

  // initial line of identity (1); theta(.,0) is nonzero only if the box
  // reaches t = 0
  double init = 0.0;
  if (theta.t_lo() < 0.0) {
    const double x0 = std::clamp(0.0, xl, xr);  // front starts at the origin
    if (x0 > xl)
      init += L.u * quad::composite([&](double x) { return theta.value(x, 0.0); }, xl, x0, rule,
                                    spec.x_panels);
    if (xr > x0)
      init += R.u * quad::composite([&](double x) { return theta.value(x, 0.0); }, x0, xr, rule,
                                    spec.x_panels);
  }

  return {std::abs(vol1 + init), std::abs(line2)};
}

double analytic_balance(const RiemannData& data) {
  const GeneralizedRH g = generalized_rh(data);  // validates k = 0, u1 != 0
  const HeavisideForm h = to_heaviside_form(data);
  return std::abs(h.sigma1 * g.phi_dot - h.sigma1 * (h.u0 + 0.5 * h.u1) + g.e_dot);
}

}  // namespace ncrs
