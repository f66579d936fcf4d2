#include "ncrs/delta_shock.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace ncrs {

namespace {

void require_limit_system(const RiemannData& data, const char* who) {
  ensure_valid(data);
  if (data.k != 0.0) throw InvalidArgument(std::string(who) + " requires the k = 0 system");
}

}  // namespace

GeneralizedRH generalized_rh(const RiemannData& data) {
  require_limit_system(data, "generalized_rh");
  if (data.left.u == data.right.u)
    throw ZeroVelocityJump("generalized R-H conditions divide by [u] = 0");
  const Jumps j = jumps(data, JumpConvention::LeftMinusRight);
  return {(j.dhalf_usq - j.dsigma) / j.du, (j.dsigma * j.dsigma) / j.du};
}

DeltaShockSolution build_delta_shock(const RiemannData& data) {
  const GeneralizedRH g = generalized_rh(data);
  return {data, g.phi_dot, g.e_dot};
}

AdmissibilityReport admissibility(const RiemannData& data) {
  require_limit_system(data, "admissibility");
  const HeavisideForm h = to_heaviside_form(data);
  AdmissibilityReport rep;
  rep.u0 = h.u0;
  rep.u1 = h.u1;
  rep.sigma1 = h.sigma1;
  rep.lax_ok = h.u1 > 0.0;
  if (h.u1 == 0.0) {
    rep.phi_dot = std::numeric_limits<double>::quiet_NaN();
    return rep;  // no front speed; not overcompressive
  }
  rep.phi_dot = generalized_rh(data).phi_dot;
  rep.raw_chain_ok = h.u0 < rep.phi_dot && rep.phi_dot < h.u0 + h.u1;
  const double ratio = h.sigma1 / h.u1;
  rep.overcompressive = h.u1 > 0.0 && -0.5 * h.u1 < ratio && ratio < 0.5 * h.u1;
  return rep;
}

const char* to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::ConstantState: return "constant-state";
    case SolutionClass::ClassicalVolpertShock: return "classical-volpert-shock";
    case SolutionClass::ConstantSigmaFan: return "constant-sigma-fan";
    case SolutionClass::DeltaShock: return "delta-shock";
    case SolutionClass::DegenerateNoFamilySolution: return "degenerate-no-family-solution";
  }
  return "?";
}

RiemannClassification classify_riemann(const RiemannData& data) {
  require_limit_system(data, "classify_riemann");
  RiemannClassification out;
  if (data.left == data.right) {
    out.cls = SolutionClass::ConstantState;
    return out;
  }
  const bool sigma_jump = data.left.sigma != data.right.sigma;
  if (!sigma_jump) {
    if (data.left.u > data.right.u) {
      out.cls = SolutionClass::ClassicalVolpertShock;
      out.speed = 0.5 * (data.left.u + data.right.u);
    } else {
      out.cls = SolutionClass::ConstantSigmaFan;
    }
    return out;
  }
  if (data.left.u == data.right.u) {
    out.cls = SolutionClass::DegenerateNoFamilySolution;
    return out;
  }
  out.cls = SolutionClass::DeltaShock;
  const GeneralizedRH g = generalized_rh(data);
  out.speed = g.phi_dot;
  out.grh = g;
  out.admissibility = admissibility(data);
  return out;
}

void write_profile_csv(std::ostream& out, const DeltaShockSolution& sol,
                       std::span<const double> xs, std::span<const double> ts) {
  out << "x,t,u,sigma_bar\n";
  char buf[128];
  for (double t : ts) {
    for (double x : xs) {
      const State v = sol.state_at(x, t);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", x, t, v.u, v.sigma);
      out << buf;
    }
  }
}

}  // namespace ncrs
