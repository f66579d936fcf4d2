#include "ncrs/rh_shock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace ncrs {

ShockSpeed shock_speed(const RiemannData& data) {
  ensure_valid(data);
  if (data.left.u == data.right.u)
    throw ZeroVelocityJump("shock speed undefined: u_L = u_R");
  const Jumps j = jumps(data, JumpConvention::RightMinusLeft);
  return {(j.dhalf_usq - j.dsigma) / j.du};
}

RHResidual rh_residual(const DlmPath& path, const RiemannData& data, double s,
                       const QuadratureSpec& spec) {
  ensure_valid(data);
  if (!std::isfinite(s)) throw InvalidArgument("shock speed must be finite");
  const State& vl = data.left;
  const State& vr = data.right;
  const double k2 = data.k * data.k;
  const auto& rule = quad::gauss_legendre(spec.order);
  const std::vector<double> knots = path.knots();
  const int panels = std::max(1, spec.panels_per_piece);

  const double row1 = quad::segments(
      [&](double t) {
        return (-s + path.phi1(t, vl, vr)) * path.d1(t, vl, vr) - path.d2(t, vl, vr);
      },
      knots, rule, panels);
  const double row2 = quad::segments(
      [&](double t) {
        return -k2 * path.d1(t, vl, vr) + (-s + path.phi1(t, vl, vr)) * path.d2(t, vl, vr);
      },
      knots, rule, panels);
  return {row1, row2, vl.u > vr.u};
}

SigmaJumpRoots sigma_quadratic_roots(double du, double k, PathKind kind) {
  if (du == 0.0 || !std::isfinite(du)) throw InvalidArgument("du must be finite and nonzero");
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("k must be finite and positive");
  double a = 0.0;
  switch (kind) {
    case PathKind::PhiExample: a = 4.0; break;
    case PathKind::PhiTildeExample: a = 2.0; break;
    case PathKind::StraightLine:
      throw InvalidFamily("the straight-line path has no shock curve");
  }
  // A r^2 + du^2 r - A k^2 du^2 = 0; discriminant du^4 + (2 A k)^2 du^2 > 0.
  const double sqrt_disc = std::abs(du) * std::hypot(du, 2.0 * a * k);
  const double s2 = -(du * du + sqrt_disc) / (2.0 * a);
  const double s1 = -(k * k * du * du) / s2;  // Vieta; avoids cancellation for k << |du|
  return {s1, s2};
}

double shock_curve_sigma(const ShockCurveSpec& spec, double u) {
  ensure_valid(spec.left, "left state");
  if (!std::isfinite(u)) throw NonFiniteValue("u must be finite");
  if (!std::isfinite(spec.system_k) || spec.system_k < 0.0)
    throw InvalidArgument("k must be finite and >= 0");
  if (spec.path_kind == PathKind::StraightLine)
    throw InvalidFamily("the straight-line path has no shock curve");
  if (!(u < spec.left.u)) throw LaxViolation("shock curves require u < u_L");

  const double du = u - spec.left.u;
  if (spec.system_k == 0.0) {
    if (spec.family == ShockFamily::S2)
      throw InvalidFamily("k = 0 has a single shock curve, labeled S1");
    const double coeff = spec.path_kind == PathKind::PhiExample ? 0.25 : 0.5;
    return spec.left.sigma - coeff * du * du;
  }
  const SigmaJumpRoots roots = sigma_quadratic_roots(du, spec.system_k, spec.path_kind);
  return spec.left.sigma + (spec.family == ShockFamily::S1 ? roots.s1 : roots.s2);
}

KLimitReport k_limit_report(const State& left, double u, PathKind kind,
                            std::span<const double> k_ladder) {
  ensure_valid(left, "left state");
  if (!(u < left.u)) throw LaxViolation("k-limit report requires u < u_L");
  if (k_ladder.size() < 2) throw InvalidArgument("k ladder needs at least two entries");
  for (size_t i = 0; i < k_ladder.size(); ++i) {
    if (!(k_ladder[i] > 0.0))
      throw InvalidArgument("k ladder entries must be positive (the k = 0 limit is the reference)");
    if (i > 0 && !(k_ladder[i] < k_ladder[i - 1]))
      throw InvalidArgument("k ladder must strictly decrease");
  }

  KLimitReport rep;
  rep.sigma_limit = shock_curve_sigma({0.0, kind, ShockFamily::S1, left}, u);
  for (double k : k_ladder) {
    const double s2 = shock_curve_sigma({k, kind, ShockFamily::S2, left}, u);
    const double s1 = shock_curve_sigma({k, kind, ShockFamily::S1, left}, u);
    rep.ks.push_back(k);
    rep.s2_error.push_back(std::abs(s2 - rep.sigma_limit));
    rep.s1_jump.push_back(std::abs(s1 - left.sigma));
  }
  rep.slope_s2 = quad::fit_loglog_slope(rep.ks, rep.s2_error);
  rep.slope_s1 = quad::fit_loglog_slope(rep.ks, rep.s1_jump);
  return rep;
}

VolpertClassification volpert_shock_exists(const RiemannData& data) {
  ensure_valid(data);
  if (data.left == data.right) return {VolpertKind::ConstantState, 0.0, 0.0};
  const Jumps j = jumps(data, JumpConvention::RightMinusLeft);
  if (j.dsigma != 0.0) return {VolpertKind::NoShock, 0.0, j.dsigma};
  if (data.left.u > data.right.u)
    return {VolpertKind::BurgersShock, 0.5 * (data.left.u + data.right.u), 0.0};
  return {VolpertKind::NotAShock, 0.0, 0.0};
}

RarefactionClassification rarefaction_possible(const RiemannData& data) {
  ensure_valid(data);
  if (data.k > 0.0)
    return {RarefactionKind::NotApplicable, "rarefaction analysis applies to the k = 0 system"};
  if (data.left.sigma != data.right.sigma)
    return {RarefactionKind::Impossible,
            "the coefficient matrix has the single eigenvector (1,0), forcing sigma' = 0 along "
            "a fan, which contradicts the sigma jump"};
  return {RarefactionKind::TrivialConstantSigma,
          "sigma is already constant; u may fan as a scalar Burgers wave"};
}

void sample_shock_curves_csv(std::ostream& out, const State& left, std::span<const double> ks,
                             PathKind kind, double u_min, int count) {
  ensure_valid(left, "left state");
  if (count < 2) throw InvalidArgument("curve sampler needs at least two points");
  if (!(u_min < left.u)) throw LaxViolation("curve sampler requires u_min < u_L");
  out << "u,sigma,family,k,path_kind\n";
  char buf[96];
  auto row = [&](double u, double sigma, const char* family, double k) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%s,%.17g,%s\n", u, sigma, family, k,
                  to_string(kind));
    out << buf;
  };
  for (double k : ks) {
    for (int i = 0; i < count; ++i) {
      // stay strictly below u_L: the curves are defined for u < u_L only
      const double frac = static_cast<double>(i + 1) / (count + 1);
      const double u = u_min + frac * (left.u - u_min);
      if (k == 0.0) {
        row(u, shock_curve_sigma({0.0, kind, ShockFamily::S1, left}, u), "limit", k);
      } else {
        row(u, shock_curve_sigma({k, kind, ShockFamily::S1, left}, u), "S1", k);
        row(u, shock_curve_sigma({k, kind, ShockFamily::S2, left}, u), "S2", k);
      }
    }
  }
}

}  // namespace ncrs
