#pragma once

#include <iosfwd>
#include <vector>

#include "ncrs/core.hpp"
#include "ncrs/dlm_paths.hpp"

// Path-dependent Rankine-Hugoniot theory for both systems: shock speed,
// residual of the R-H condition along a path, the closed-form shock curves of
// the two example paths, and the k -> 0 degeneration of the k > 0 branches.

namespace ncrs {

struct ShockSpeed {
  double s = 0.0;
};

/// s = ([u^2/2] - [sigma]) / [u]; the ratio is invariant under the jump
/// convention and shared by the k = 0 and k > 0 systems.
/// Throws ZeroVelocityJump when u_L = u_R.
ShockSpeed shock_speed(const RiemannData& data);

struct RHResidual {
  double row1 = 0.0;
  double row2 = 0.0;
  bool lax_ok = false;  // u_L > u_R; advisory only, the residual is evaluated regardless
};

/// Both rows of the R-H condition along the path, by quadrature:
///   row1 = int (-s + phi1) (phi1)_t - (phi2)_t dt
///   row2 = int -k^2 (phi1)_t + (-s + phi1) (phi2)_t dt
/// Row1 telescopes to -s[u] + [u^2/2] - [sigma] (right-minus-left jumps)
/// independent of the path interior.
RHResidual rh_residual(const DlmPath& path, const RiemannData& data, double s,
                       const QuadratureSpec& spec = {});

enum class ShockFamily { S1, S2 };

struct ShockCurveSpec {
  double system_k = 0.0;
  PathKind path_kind = PathKind::PhiExample;  // PhiExample or PhiTildeExample
  ShockFamily family = ShockFamily::S1;
  State left;
};

/// sigma on the requested shock curve through `left`, evaluated at u < u_L.
/// k = 0 has a single curve (labeled S1; requesting S2 throws InvalidFamily):
///   phi:       sigma = sigma_L - (u - u_L)^2 / 4
///   phi-tilde: sigma = sigma_L - (u - u_L)^2 / 2
/// k > 0 selects a branch of the sigma-jump quadratic (see
/// sigma_quadratic_roots). Throws LaxViolation for u >= u_L.
double shock_curve_sigma(const ShockCurveSpec& spec, double u);

struct SigmaJumpRoots {
  double s1 = 0.0;  // larger root; tends to 0 as k -> 0
  double s2 = 0.0;  // smaller root; tends to -du^2/4 (phi) or -du^2/2 (phi-tilde)
};

/// Roots of the sigma-jump quadratic for the k > 0 system,
///   A [sigma]^2 + du^2 [sigma] - A k^2 du^2 = 0,  A = 4 (phi) or 2 (phi-tilde),
/// solved in the cancellation-free form (large root by direct formula, the
/// other via Vieta) so k << |du| stays accurate. Requires du != 0, k > 0.
SigmaJumpRoots sigma_quadratic_roots(double du, double k, PathKind kind);

struct KLimitReport {
  std::vector<double> ks;
  std::vector<double> s2_error;      // |sigma_S2(k) - sigma_limit|
  std::vector<double> s1_jump;       // |sigma_S1(k) - sigma_L|, the vanishing branch
  double sigma_limit = 0.0;
  double slope_s2 = 0.0;  // fitted log-log slope, ~2
  double slope_s1 = 0.0;
};

/// Tabulates the k -> 0 degeneration of both branches along a decreasing,
/// positive k ladder (k = 0 entries are rejected; the limit is the reference).
KLimitReport k_limit_report(const State& left, double u, PathKind kind,
                            std::span<const double> k_ladder);

enum class VolpertKind { ConstantState, NoShock, BurgersShock, NotAShock };

struct VolpertClassification {
  VolpertKind kind = VolpertKind::NotAShock;
  double speed = 0.0;       // set for BurgersShock
  double sigma_jump = 0.0;  // witness [sigma] (right minus left), set for NoShock
};

/// Whether the straight-line (Volpert) product admits a shock for the k = 0
/// system: the two jump relations force [sigma] = 0, so data with a stress
/// jump classify as NoShock; with [sigma] = 0 the system reduces to Burgers
/// in u and the usual shock with s = (u_L + u_R)/2 survives when u_L > u_R.
VolpertClassification volpert_shock_exists(const RiemannData& data);

enum class RarefactionKind { Impossible, TrivialConstantSigma, NotApplicable };

struct RarefactionClassification {
  RarefactionKind kind = RarefactionKind::NotApplicable;
  std::string reason;
};

/// Rarefactions for the k = 0 system require the single right eigenvector
/// (1,0), forcing sigma constant along the fan; data with a sigma jump get
/// Impossible. Returns NotApplicable for k > 0.
RarefactionClassification rarefaction_possible(const RiemannData& data);

/// Plot-ready sampler: rows u,sigma,family,k,path_kind for each k in `ks`
/// (family is "limit" for k = 0) over a uniform u-grid below left.u.
void sample_shock_curves_csv(std::ostream& out, const State& left, std::span<const double> ks,
                             PathKind kind, double u_min, int count);

}  // namespace ncrs
