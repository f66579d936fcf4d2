#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ncrs/core.hpp"
#include "ncrs/quadrature.hpp"

// Lipschitz paths phi(t; v_L, v_R) connecting the two sides of a
// discontinuity. A path defines the nonconservative product and with it the
// path-dependent Rankine-Hugoniot condition; the built-ins below are the
// canonical examples (straight line plus the two kinked variants whose shock
// curves are known in closed form).

namespace ncrs {

using PathComponentFn = std::function<double(double, const State&, const State&)>;

struct DlmPath {
  PathComponentFn phi1;   // u-component, phi1(0)=u_L, phi1(1)=u_R
  PathComponentFn phi2;   // sigma-component
  PathComponentFn dphi1;  // exact t-derivatives; empty -> central differences
  PathComponentFn dphi2;
  std::vector<double> breakpoints;  // interior knots in (0,1), sorted
  std::string name;

  State eval(double t, const State& vl, const State& vr) const;
  double d1(double t, const State& vl, const State& vr) const;
  double d2(double t, const State& vl, const State& vr) const;
  /// {0, breakpoints..., 1}
  std::vector<double> knots() const;
};

enum class PathKind { StraightLine, PhiExample, PhiTildeExample };

const char* to_string(PathKind k);

/// The straight line and the two piecewise-linear example paths. All three
/// satisfy the path axioms for every state pair.
DlmPath builtin_path(PathKind kind);

/// Sampled polyline path; breakpoints at every interior vertex. Requires
/// strictly increasing t with t.front()=0, t.back()=1.
DlmPath polyline_path(std::vector<double> t, std::vector<double> p1, std::vector<double> p2);

/// Loads a polyline path from CSV with columns t,phi1,phi2 (header optional).
DlmPath load_polyline_csv(std::istream& in);
DlmPath load_polyline_csv(const std::string& filename);

struct QuadratureSpec {
  int order = 8;             // Gauss-Legendre points per panel
  int panels_per_piece = 1;  // panels between consecutive knots
};

struct PathAxiomReport {
  bool endpoints_ok = false;
  bool consistency_ok = false;
  double lipschitz_estimate = 0.0;  // sampled bound for the axiom-3 constant
  double max_violation = 0.0;
  std::string note;  // records that axiom 3 is checked statistically only

  bool pass(double tol) const { return max_violation <= tol; }
};

/// Numerical certificate for the three path axioms. Endpoint and consistency
/// axioms are checked exactly at sampled t; the axiom-3 constant is estimated
/// from finite differences over the probe pairs (a sampled bound, not a
/// certified one). Throws NonFiniteValue if a component evaluates non-finite.
PathAxiomReport validate_axioms(const DlmPath& path,
                                std::span<const std::pair<State, State>> probes, double tol);

/// Integral of phi1 * (phi2)_t over [0,1], split at the declared breakpoints.
double path_coupling_integral(const DlmPath& path, const State& vl, const State& vr,
                              const QuadratureSpec& spec = {});

enum class PathComponent { Phi1, Phi2 };

/// Integral of the requested component over [0,1].
double path_component_integral(const DlmPath& path, const State& vl, const State& vr,
                               PathComponent which, const QuadratureSpec& spec = {});

}  // namespace ncrs
