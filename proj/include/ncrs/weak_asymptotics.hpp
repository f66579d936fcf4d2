#pragma once

#include <array>
#include <span>
#include <vector>

#include "ncrs/core.hpp"
#include "ncrs/mollifier.hpp"
#include "ncrs/test_functions.hpp"

// Mollifier-regularized smooth ansatz for the delta-shock, the asymptotic
// expansion of its building blocks, and the measured decay of the weak
// residuals over an epsilon ladder.
//
// Pieces, for a kernel omega and plateau constant c:
//   R(x,eps)     = omega((x - 2 eps)/eps) / sqrt(eps)     support (eps, 3 eps)
//   delta(x,eps) = omega((x + 2 eps)/eps) / eps           support (-3 eps, -eps)
//   H(x,eps)     = 0 below -4 eps, c on [-3 eps, 3 eps], 1 above 4 eps,
//                  quintic C^2 joins on the two gaps.
// R and delta have disjoint supports for every eps > 0, and the delta-side
// supports sit inside H's plateau; several products below vanish identically
// because of this, not just in the limit.

namespace ncrs {

struct RegularizedPieces {
  Mollifier moll;
  double c = 0.5;  // plateau value; 1/2 - sigma1/u1^2 for a Riemann datum

  double R(double x, double eps) const;
  double R_x(double x, double eps) const;
  double delta(double x, double eps) const;
  double delta_x(double x, double eps) const;
  double H(double x, double eps) const;
  double H_x(double x, double eps) const;
};

RegularizedPieces make_pieces(double c, MollifierKind kind = MollifierKind::Bump);

enum class ExpansionTerm {
  R,
  Rx,
  RSquared,
  RRx,
  Delta,
  DeltaX,
  RDelta,
  RDeltaX,
  H,
  Hx,
  HHx,
  HRxMirrored,      // H(x,eps) R_x(-x,eps)
  RMirroredHx,      // R(-x,eps) H_x(x,eps), identically zero
  HDeltaXMirrored,  // H(x,eps) delta_x(-x,eps)
};

inline constexpr std::array<ExpansionTerm, 14> kAllExpansionTerms = {
    ExpansionTerm::R,       ExpansionTerm::Rx,          ExpansionTerm::RSquared,
    ExpansionTerm::RRx,     ExpansionTerm::Delta,       ExpansionTerm::DeltaX,
    ExpansionTerm::RDelta,  ExpansionTerm::RDeltaX,     ExpansionTerm::H,
    ExpansionTerm::Hx,      ExpansionTerm::HHx,         ExpansionTerm::HRxMirrored,
    ExpansionTerm::RMirroredHx, ExpansionTerm::HDeltaXMirrored};

const char* to_string(ExpansionTerm t);

/// Pairing <term(., eps), theta> by Gauss quadrature over the term's support.
double expansion_term(ExpansionTerm term, const RegularizedPieces& pieces,
                      const TestFunction1D& theta, double eps);

/// The eps -> 0 limit of the pairing:
///   R, R_x, R delta, R delta_x, H R_x(-x), R(-x) H_x -> 0
///   R^2 -> omega0 theta(0);  R R_x -> -omega0 theta'(0) / 2
///   delta -> theta(0);       delta_x -> -theta'(0)
///   H -> int_0^inf theta;    H_x -> theta(0);  H H_x -> theta(0)/2
///   H delta_x(-x) -> c theta'(0)
double expansion_limit(ExpansionTerm term, const RegularizedPieces& pieces,
                       const TestFunction1D& theta);

/// Smooth fields u(x,t,eps), sigma(x,t,eps) built from the pieces:
///   u     = u0 + u1 H(-x + phi(t), eps) + p(t) R(x - phi(t), eps)
///   sigma = sigma0 + sigma1 H(-x + phi(t), eps) + e(t) delta(x - phi(t), eps)
/// with phi(t) = phi_dot t, e(t) = e_dot t and p(t) = sqrt(2 e(t) / omega0).
/// All derivatives are analytic (chain rule through omega'); p'(t) has an
/// integrable 1/sqrt(t) singularity at t = 0 whenever e_dot > 0.
struct RegularizedAnsatz {
  HeavisideForm data;
  double eps = 0.0;
  double phi_dot = 0.0;
  double e_dot = 0.0;
  double c = 0.5;
  Mollifier moll;

  double front(double t) const { return phi_dot * t; }
  double e(double t) const { return e_dot * t; }
  double p(double t) const;
  double p_dot(double t) const;

  double u(double x, double t) const;
  double sigma(double x, double t) const;
  double u_t(double x, double t) const;
  double u_x(double x, double t) const;
  double sigma_t(double x, double t) const;
  double sigma_x(double x, double t) const;

  /// u_t + u u_x - sigma_x and sigma_t + u sigma_x at a point.
  double residual1(double x, double t) const;
  double residual2(double x, double t) const;

  RegularizedPieces pieces() const { return {moll, c}; }
};

/// Assembles the ansatz. Requires k = 0; throws NonAdmissible when
/// e_dot < 0 (p would be imaginary; the datum fails overcompressivity) and
/// ZeroVelocityJump for u_L = u_R with a sigma jump.
RegularizedAnsatz build_ansatz(const RiemannData& data, double eps);
RegularizedAnsatz build_ansatz(const RiemannData& data, double eps, const Mollifier& moll);

struct WeakQuadSpec {
  int order = 16;           // Gauss points per subpanel
  int subpanels_per_eps = 4;
  int t_panels = 40;
  long max_point_evals = 200000000;  // throws ResolutionError beyond this
};

struct WeakResidual {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// |<u_t + u u_x - sigma_x, theta>| and |<sigma_t + u sigma_x, theta>| by
/// tensor quadrature with x-panels aligned to the support boundaries
/// {-4,-3,-1,1,3,4} eps shifted by phi(t).
WeakResidual weak_residual(const RegularizedAnsatz& ansatz, const TestFunction& theta,
                           const WeakQuadSpec& spec = {});

struct ResidualReport {
  std::vector<double> eps_ladder;
  std::vector<double> r1;
  std::vector<double> r2;
  bool monotone1 = false, monotone2 = false;
  bool slopes_defined = false;  // false when residuals vanish (exact solutions)
  double slope1 = 0.0, slope2 = 0.0;
  double end_ratio1 = 0.0, end_ratio2 = 0.0;  // r(eps_min) / r(eps_max)

  bool pass(double end_ratio_bound) const {
    return monotone1 && monotone2 && slopes_defined && slope1 > 0.0 && slope2 > 0.0 &&
           end_ratio1 <= end_ratio_bound && end_ratio2 <= end_ratio_bound;
  }
};

/// Runs weak_residual along a decreasing geometric ladder (entries evaluate
/// in parallel) and fits log-log decay slopes.
ResidualReport residual_sweep(const RiemannData& data, const TestFunction& theta,
                              std::span<const double> eps_ladder, const WeakQuadSpec& spec = {});

}  // namespace ncrs
