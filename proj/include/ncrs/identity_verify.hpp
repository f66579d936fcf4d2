#pragma once

#include "ncrs/core.hpp"
#include "ncrs/delta_shock.hpp"
#include "ncrs/test_functions.hpp"

// Verification of the integral identities a generalized delta-shock must
// satisfy, by exact region-split quadrature of every term:
//
//   (1)  int int (u theta_t + (u^2/2 - sigma_bar) theta_x) dx dt
//          + int u(x,0) theta(x,0) dx                                = 0
//   (2)  int int (sigma_bar_t + u_hat sigma_bar_x) theta dx dt
//          - int_Gamma e dtheta/dl dl                                = 0
//
// The second identity's Volpert term reduces exactly to a line integral
// along the front (the bounded parts are constant off the front); identity
// (2) is evaluated in that reduced form, independent of the mollified route.

namespace ncrs {

/// Volpert average at a jump: the mean of the one-sided traces.
inline double volpert_average(double left_trace, double right_trace) {
  return 0.5 * (left_trace + right_trace);
}

struct IdentityQuadSpec {
  int order = 16;
  int t_panels = 20;
  int x_panels = 12;
};

struct IdentityResidualPair {
  double id1 = 0.0;
  double id2 = 0.0;
};

/// Residuals of both identities for the given solution and test function.
IdentityResidualPair identity_residuals(const DeltaShockSolution& sol, const TestFunction& theta,
                                        const IdentityQuadSpec& spec = {});

/// |sigma1 phi_dot - sigma1 (u0 + u1/2) + e_dot|: the amplitude balance the
/// front conditions satisfy identically. Requires k = 0 and u1 != 0.
double analytic_balance(const RiemannData& data);

}  // namespace ncrs
