#pragma once

#include <iosfwd>
#include <optional>
#include <span>

#include "ncrs/core.hpp"

// Construction and classification of singular Riemann solutions of the k = 0
// system: a shock front x = phi(t) carrying a growing Dirac amplitude e(t) in
// the stress, governed by the generalized Rankine-Hugoniot conditions
//   phi_dot = ([u^2/2] - [sigma]) / [u],   e_dot = [sigma]^2 / [u]
// with left-minus-right jumps.

namespace ncrs {

struct GeneralizedRH {
  double phi_dot = 0.0;
  double e_dot = 0.0;
};

/// Generalized R-H conditions for the front speed and amplitude growth rate.
/// Requires k = 0 and u_L != u_R (see classify_riemann for the degenerate
/// family with u_L = u_R).
GeneralizedRH generalized_rh(const RiemannData& data);

/// Delta-shock solution: front phi(t) = s t, amplitude e(t) = e_dot t, and
/// the two bounded states away from the front.
struct DeltaShockSolution {
  RiemannData data;
  double s = 0.0;
  double e_dot = 0.0;

  double front(double t) const { return s * t; }
  double amplitude(double t) const { return e_dot * t; }
  /// Bounded part of the solution off the front (x != phi(t)).
  State state_at(double x, double t) const { return x < front(t) ? data.left : data.right; }
};

DeltaShockSolution build_delta_shock(const RiemannData& data);

/// Overcompressivity: characteristics on both sides run into the front,
/// u0 < phi_dot < u0 + u1, which simplifies to
/// u1 > 0 and -u1/2 < sigma1/u1 < u1/2 (strict, as printed).
struct AdmissibilityReport {
  bool lax_ok = false;          // u_L > u_R
  bool overcompressive = false;
  bool raw_chain_ok = false;    // u0 < phi_dot < u0 + u1, evaluated directly
  double u0 = 0.0, u1 = 0.0, sigma1 = 0.0;
  double phi_dot = 0.0;  // NaN when u1 = 0 (no front speed defined)
};

AdmissibilityReport admissibility(const RiemannData& data);

enum class SolutionClass {
  ConstantState,
  ClassicalVolpertShock,      // [sigma] = 0, u_L > u_R: plain Burgers shock
  ConstantSigmaFan,           // [sigma] = 0, u_L < u_R: sigma constant, u fans
  DeltaShock,                 // u_L != u_R, [sigma] != 0
  DegenerateNoFamilySolution  // u_L = u_R, [sigma] != 0: the construction divides by zero
};

const char* to_string(SolutionClass c);

struct RiemannClassification {
  SolutionClass cls = SolutionClass::ConstantState;
  std::optional<double> speed;                       // Volpert shock or delta-shock front
  std::optional<GeneralizedRH> grh;                  // delta-shock only
  std::optional<AdmissibilityReport> admissibility;  // delta-shock only
};

/// Dispatch over the solution families of the k = 0 Riemann problem. The
/// degenerate case u_L = u_R with a sigma jump is surfaced as its own class
/// rather than an error: the construction genuinely does not cover it.
RiemannClassification classify_riemann(const RiemannData& data);

/// Samples the bounded part (u, sigma_bar) on a grid; the concentration has
/// no pointwise values, so front position and e(t) go to a sidecar record.
void write_profile_csv(std::ostream& out, const DeltaShockSolution& sol,
                       std::span<const double> xs, std::span<const double> ts);

}  // namespace ncrs
