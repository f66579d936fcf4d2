#include "ncrs/weak_asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "ncrs/delta_shock.hpp"
#include "ncrs/parallel.hpp"
#include "ncrs/quadrature.hpp"

namespace ncrs {

namespace {

// quintic smoothstep: q(0)=0, q(1)=1, q'=q''=0 at both ends
double quintic(double s) { return s * s * s * (10.0 + s * (-15.0 + 6.0 * s)); }
double quintic_deriv(double s) {
  const double r = s * (1.0 - s);
  return 30.0 * r * r;
}

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidArgument("eps must be finite and > 0");
}

}  // namespace

double RegularizedPieces::R(double x, double eps) const {
  check_eps(eps);
  return moll((x - 2.0 * eps) / eps) / std::sqrt(eps);
}

double RegularizedPieces::R_x(double x, double eps) const {
  check_eps(eps);
  return moll.deriv((x - 2.0 * eps) / eps) / (eps * std::sqrt(eps));
}

double RegularizedPieces::delta(double x, double eps) const {
  check_eps(eps);
  return moll((x + 2.0 * eps) / eps) / eps;
}

double RegularizedPieces::delta_x(double x, double eps) const {
  check_eps(eps);
  return moll.deriv((x + 2.0 * eps) / eps) / (eps * eps);
}

double RegularizedPieces::H(double x, double eps) const {
  check_eps(eps);
  if (x <= -4.0 * eps) return 0.0;
  if (x >= 4.0 * eps) return 1.0;
  if (x < -3.0 * eps) return c * quintic((x + 4.0 * eps) / eps);
  if (x <= 3.0 * eps) return c;
  return c + (1.0 - c) * quintic((x - 3.0 * eps) / eps);
}

double RegularizedPieces::H_x(double x, double eps) const {
  check_eps(eps);
  if (x > -4.0 * eps && x < -3.0 * eps) return c * quintic_deriv((x + 4.0 * eps) / eps) / eps;
  if (x > 3.0 * eps && x < 4.0 * eps)
    return (1.0 - c) * quintic_deriv((x - 3.0 * eps) / eps) / eps;
  return 0.0;
}

RegularizedPieces make_pieces(double c, MollifierKind kind) {
  if (!std::isfinite(c)) throw NonFiniteValue("plateau constant must be finite");
  return {make_mollifier(kind), c};
}

const char* to_string(ExpansionTerm t) {
  switch (t) {
    case ExpansionTerm::R: return "R";
    case ExpansionTerm::Rx: return "R_x";
    case ExpansionTerm::RSquared: return "R^2";
    case ExpansionTerm::RRx: return "R*R_x";
    case ExpansionTerm::Delta: return "delta";
    case ExpansionTerm::DeltaX: return "delta_x";
    case ExpansionTerm::RDelta: return "R*delta";
    case ExpansionTerm::RDeltaX: return "R*delta_x";
    case ExpansionTerm::H: return "H";
    case ExpansionTerm::Hx: return "H_x";
    case ExpansionTerm::HHx: return "H*H_x";
    case ExpansionTerm::HRxMirrored: return "H*R_x(-x)";
    case ExpansionTerm::RMirroredHx: return "R(-x)*H_x";
    case ExpansionTerm::HDeltaXMirrored: return "H*delta_x(-x)";
  }
  return "?";
}

namespace {

// composite rule over [a,b] clipped to the theta support
double pair_on(const std::function<double(double)>& f, double a, double b,
               const TestFunction1D& th, int panels = 8) {
  a = std::max(a, th.lo());
  b = std::min(b, th.hi());
  if (!(b > a)) return 0.0;
  return quad::composite([&](double x) { return f(x) * th(x); }, a, b,
                         quad::gauss_legendre(16), panels);
}

}  // namespace

double expansion_term(ExpansionTerm term, const RegularizedPieces& pc,
                      const TestFunction1D& theta, double eps) {
  check_eps(eps);
  const double e = eps;
  switch (term) {
    case ExpansionTerm::R:
      return pair_on([&](double x) { return pc.R(x, e); }, e, 3 * e, theta);
    case ExpansionTerm::Rx:
      return pair_on([&](double x) { return pc.R_x(x, e); }, e, 3 * e, theta);
    case ExpansionTerm::RSquared:
      return pair_on([&](double x) { return pc.R(x, e) * pc.R(x, e); }, e, 3 * e, theta);
    case ExpansionTerm::RRx:
      return pair_on([&](double x) { return pc.R(x, e) * pc.R_x(x, e); }, e, 3 * e, theta);
    case ExpansionTerm::Delta:
      return pair_on([&](double x) { return pc.delta(x, e); }, -3 * e, -e, theta);
    case ExpansionTerm::DeltaX:
      return pair_on([&](double x) { return pc.delta_x(x, e); }, -3 * e, -e, theta);
    case ExpansionTerm::RDelta:
      // disjoint supports: the integrand vanishes pointwise
      return pair_on([&](double x) { return pc.R(x, e) * pc.delta(x, e); }, -3 * e, 3 * e, theta);
    case ExpansionTerm::RDeltaX:
      return pair_on([&](double x) { return pc.R(x, e) * pc.delta_x(x, e); }, -3 * e, 3 * e,
                     theta);
    case ExpansionTerm::H:
      return pair_on([&](double x) { return pc.H(x, e); }, -4 * e, 4 * e, theta, 16) +
             pair_on([](double) { return 1.0; }, 4 * e, theta.hi(), theta, 24);
    case ExpansionTerm::Hx:
      return pair_on([&](double x) { return pc.H_x(x, e); }, -4 * e, -3 * e, theta) +
             pair_on([&](double x) { return pc.H_x(x, e); }, 3 * e, 4 * e, theta);
    case ExpansionTerm::HHx:
      return pair_on([&](double x) { return pc.H(x, e) * pc.H_x(x, e); }, -4 * e, -3 * e, theta) +
             pair_on([&](double x) { return pc.H(x, e) * pc.H_x(x, e); }, 3 * e, 4 * e, theta);
    case ExpansionTerm::HRxMirrored:
      return pair_on([&](double x) { return pc.H(x, e) * pc.R_x(-x, e); }, -3 * e, -e, theta);
    case ExpansionTerm::RMirroredHx:
      // R(-x) lives on (-3e,-e), H_x on the joins: disjoint, vanishes pointwise
      return pair_on([&](double x) { return pc.R(-x, e) * pc.H_x(x, e); }, -4 * e, 4 * e, theta);
    case ExpansionTerm::HDeltaXMirrored:
      return pair_on([&](double x) { return pc.H(x, e) * pc.delta_x(-x, e); }, e, 3 * e, theta);
  }
  throw InvalidArgument("unknown expansion term");
}

double expansion_limit(ExpansionTerm term, const RegularizedPieces& pc,
                       const TestFunction1D& theta) {
  const double t0 = theta(0.0);
  const double tp0 = theta.deriv(0.0);
  switch (term) {
    case ExpansionTerm::R:
    case ExpansionTerm::Rx:
    case ExpansionTerm::RDelta:
    case ExpansionTerm::RDeltaX:
    case ExpansionTerm::HRxMirrored:
    case ExpansionTerm::RMirroredHx: return 0.0;
    case ExpansionTerm::RSquared: return pc.moll.omega0 * t0;
    case ExpansionTerm::RRx: return -0.5 * pc.moll.omega0 * tp0;
    case ExpansionTerm::Delta: return t0;
    case ExpansionTerm::DeltaX: return -tp0;
    case ExpansionTerm::H:
      if (theta.hi() <= 0.0) return 0.0;
      return quad::composite([&](double x) { return theta(x); }, std::max(0.0, theta.lo()),
                             theta.hi(), quad::gauss_legendre(16), 40);
    case ExpansionTerm::Hx: return t0;
    case ExpansionTerm::HHx: return 0.5 * t0;
    case ExpansionTerm::HDeltaXMirrored: return pc.c * tp0;
  }
  throw InvalidArgument("unknown expansion term");
}

double RegularizedAnsatz::p(double t) const {
  if (e_dot == 0.0) return 0.0;
  return std::sqrt(2.0 * e(t) / moll.omega0);
}

double RegularizedAnsatz::p_dot(double t) const {
  if (e_dot == 0.0) return 0.0;
  return std::sqrt(e_dot / (2.0 * moll.omega0 * t));
}

double RegularizedAnsatz::u(double x, double t) const {
  const RegularizedPieces pc{moll, c};
  return data.u0 + data.u1 * pc.H(-x + front(t), eps) + p(t) * pc.R(x - front(t), eps);
}

double RegularizedAnsatz::sigma(double x, double t) const {
  const RegularizedPieces pc{moll, c};
  return data.sigma0 + data.sigma1 * pc.H(-x + front(t), eps) +
         e(t) * pc.delta(x - front(t), eps);
}

double RegularizedAnsatz::u_t(double x, double t) const {
  const RegularizedPieces pc{moll, c};
  const double ph = front(t);
  return data.u1 * pc.H_x(-x + ph, eps) * phi_dot + p_dot(t) * pc.R(x - ph, eps) -
         p(t) * pc.R_x(x - ph, eps) * phi_dot;
}

double RegularizedAnsatz::u_x(double x, double t) const {
  const RegularizedPieces pc{moll, c};
  const double ph = front(t);
  return -data.u1 * pc.H_x(-x + ph, eps) + p(t) * pc.R_x(x - ph, eps);
}

double RegularizedAnsatz::sigma_t(double x, double t) const {
  const RegularizedPieces pc{moll, c};
  const double ph = front(t);
  return data.sigma1 * pc.H_x(-x + ph, eps) * phi_dot + e_dot * pc.delta(x - ph, eps) -
         e(t) * pc.delta_x(x - ph, eps) * phi_dot;
}

double RegularizedAnsatz::sigma_x(double x, double t) const {
  const RegularizedPieces pc{moll, c};
  const double ph = front(t);
  return -data.sigma1 * pc.H_x(-x + ph, eps) + e(t) * pc.delta_x(x - ph, eps);
}

double RegularizedAnsatz::residual1(double x, double t) const {
  return u_t(x, t) + u(x, t) * u_x(x, t) - sigma_x(x, t);
}

double RegularizedAnsatz::residual2(double x, double t) const {
  return sigma_t(x, t) + u(x, t) * sigma_x(x, t);
}

RegularizedAnsatz build_ansatz(const RiemannData& riemann, double eps) {
  return build_ansatz(riemann, eps, make_mollifier());
}

RegularizedAnsatz build_ansatz(const RiemannData& riemann, double eps, const Mollifier& moll) {
  ensure_valid(riemann);
  check_eps(eps);
  if (riemann.k != 0.0) throw InvalidArgument("the regularized ansatz targets the k = 0 system");
  const HeavisideForm h = to_heaviside_form(riemann);

  RegularizedAnsatz a;
  a.data = h;
  a.eps = eps;
  a.moll = moll;
  if (h.u1 == 0.0 && h.sigma1 == 0.0) {
    a.phi_dot = h.u0;  // constant data: any front works, the fields are constant
    a.e_dot = 0.0;
    a.c = 0.5;
    return a;
  }
  const GeneralizedRH g = generalized_rh(riemann);  // throws for u1 = 0, sigma1 != 0
  if (g.e_dot < 0.0)
    throw NonAdmissible(
        "e(t) would decrease (e_dot = [sigma]^2/[u] < 0, u_L < u_R): p(t) is imaginary and the "
        "datum fails the overcompressivity condition");
  a.phi_dot = g.phi_dot;
  a.e_dot = g.e_dot;
  a.c = 0.5 - h.sigma1 / (h.u1 * h.u1);
  return a;
}

namespace {

struct PanelSet {
  std::vector<std::pair<double, double>> xs;  // clipped x-intervals around the front
};

// residual support: [phi-4e, phi-e] and [phi+e, phi+4e], split at +-3e
PanelSet x_pieces(double ph, double eps, const TestFunction& th) {
  PanelSet out;
  const double cands[4][2] = {{ph - 4 * eps, ph - 3 * eps},
                              {ph - 3 * eps, ph - eps},
                              {ph + eps, ph + 3 * eps},
                              {ph + 3 * eps, ph + 4 * eps}};
  for (auto& c : cands) {
    const double a = std::max(c[0], th.x_lo());
    const double b = std::min(c[1], th.x_hi());
    if (b > a) out.xs.emplace_back(a, b);
  }
  return out;
}

}  // namespace

WeakResidual weak_residual(const RegularizedAnsatz& ansatz, const TestFunction& theta,
                           const WeakQuadSpec& spec) {
  check_eps(ansatz.eps);
  const double eps = ansatz.eps;
  const double t_lo = std::max(0.0, theta.t_lo());
  const double t_hi = theta.t_hi();
  if (!(t_hi > t_lo)) return {0.0, 0.0};

  const auto& rule = quad::gauss_legendre(spec.order);
  const long t_nodes = static_cast<long>(spec.t_panels + 1) * rule.order();
  const long x_nodes_per_t = static_cast<long>(8 * spec.subpanels_per_eps) * rule.order();
  if (t_nodes * x_nodes_per_t > spec.max_point_evals)
    throw ResolutionError("weak residual grid exceeds the evaluation budget");

  double acc1 = 0.0, acc2 = 0.0;
  auto inner = [&](double t, double wt) {
    const double ph = ansatz.front(t);
    for (auto [a, b] : x_pieces(ph, eps, theta).xs) {
      const int panels =
          std::max(1, static_cast<int>(std::ceil((b - a) / eps * spec.subpanels_per_eps)));
      const double h = (b - a) / panels;
      for (int pnl = 0; pnl < panels; ++pnl) {
        const double mid = a + (pnl + 0.5) * h;
        for (int i = 0; i < rule.order(); ++i) {
          const double x = mid + 0.5 * h * rule.node[i];
          const double w = wt * 0.5 * h * rule.weight[i] * theta.value(x, t);
          if (w == 0.0) continue;
          const double f1 = ansatz.residual1(x, t);
          const double f2 = ansatz.residual2(x, t);
          if (!std::isfinite(f1) || !std::isfinite(f2))
            throw QuadratureError("non-finite ansatz residual");
          acc1 += w * f1;
          acc2 += w * f2;
        }
      }
    }
  };

  // t = 0 end: p'(t) ~ 1/sqrt(t); substitute t = t_split s^2 on the first panel
  double t_start = t_lo;
  if (t_lo == 0.0 && ansatz.e_dot > 0.0) {
    const double t_split = std::min(t_hi, (t_hi - t_lo) / 8.0);
    for (int pnl = 0; pnl < 4; ++pnl) {
      const double sa = pnl / 4.0, sb = (pnl + 1) / 4.0;
      for (int i = 0; i < rule.order(); ++i) {
        const double s = 0.5 * (sa + sb) + 0.5 * (sb - sa) * rule.node[i];
        const double jac = 2.0 * t_split * s;
        inner(t_split * s * s, 0.5 * (sb - sa) * rule.weight[i] * jac);
      }
    }
    t_start = t_split;
  }
  const int tp = std::max(1, spec.t_panels);
  const double ht = (t_hi - t_start) / tp;
  for (int pnl = 0; pnl < tp; ++pnl) {
    const double mid = t_start + (pnl + 0.5) * ht;
    for (int i = 0; i < rule.order(); ++i)
      inner(mid + 0.5 * ht * rule.node[i], 0.5 * ht * rule.weight[i]);
  }
  return {std::abs(acc1), std::abs(acc2)};
}

ResidualReport residual_sweep(const RiemannData& data, const TestFunction& theta,
                              std::span<const double> eps_ladder, const WeakQuadSpec& spec) {
  if (eps_ladder.size() < 2) throw InvalidArgument("eps ladder needs at least two entries");
  for (size_t i = 0; i < eps_ladder.size(); ++i) {
    if (!(eps_ladder[i] > 0.0)) throw InvalidArgument("eps ladder entries must be positive");
    if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
      throw InvalidArgument("ladder must decrease");
  }
  if (eps_ladder.size() >= 3) {
    const double r0 = eps_ladder[1] / eps_ladder[0];
    for (size_t i = 2; i < eps_ladder.size(); ++i) {
      const double r = eps_ladder[i] / eps_ladder[i - 1];
      if (std::abs(r - r0) > 1e-6 * r0) throw InvalidArgument("eps ladder must be geometric");
    }
  }

  ResidualReport rep;
  rep.eps_ladder.assign(eps_ladder.begin(), eps_ladder.end());
  rep.r1.resize(eps_ladder.size());
  rep.r2.resize(eps_ladder.size());
  parallel_for(eps_ladder.size(), [&](size_t i) {
    const RegularizedAnsatz a = build_ansatz(data, eps_ladder[i]);
    const WeakResidual wr = weak_residual(a, theta, spec);
    rep.r1[i] = wr.r1;
    rep.r2[i] = wr.r2;
  });

  rep.monotone1 = rep.monotone2 = true;
  for (size_t i = 1; i < rep.r1.size(); ++i) {
    rep.monotone1 = rep.monotone1 && rep.r1[i] < rep.r1[i - 1];
    rep.monotone2 = rep.monotone2 && rep.r2[i] < rep.r2[i - 1];
  }
  rep.slopes_defined = true;
  for (double v : rep.r1) rep.slopes_defined = rep.slopes_defined && v > 0.0;
  for (double v : rep.r2) rep.slopes_defined = rep.slopes_defined && v > 0.0;
  if (rep.slopes_defined) {
    rep.slope1 = quad::fit_loglog_slope(rep.eps_ladder, rep.r1);
    rep.slope2 = quad::fit_loglog_slope(rep.eps_ladder, rep.r2);
  }
  rep.end_ratio1 = rep.r1.front() > 0.0 ? rep.r1.back() / rep.r1.front() : 0.0;
  rep.end_ratio2 = rep.r2.front() > 0.0 ? rep.r2.back() / rep.r2.front() : 0.0;
  return rep;
}

}  // namespace ncrs
