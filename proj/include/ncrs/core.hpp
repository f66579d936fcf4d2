#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

// Core phase-space types for the 2x2 nonconservative elastodynamics system
//
//   u_t + u u_x - sigma_x = 0
//   sigma_t + u sigma_x - k^2 u_x = 0        (k = 0 selects the degenerate limit)
//
// All types are immutable values; every operation here is pure.

namespace ncrs {

inline constexpr const char* kVersion = "0.1.0";

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFiniteValue : Error { using Error::Error; };
struct ZeroVelocityJump : Error { using Error::Error; };
struct LaxViolation : Error { using Error::Error; };
struct InvalidFamily : Error { using Error::Error; };
struct NonAdmissible : Error { using Error::Error; };
struct ResolutionError : Error { using Error::Error; };
struct InvalidArgument : Error { using Error::Error; };
struct QuadratureError : Error { using Error::Error; };

/// A point (u, sigma) in phase space: u is the velocity, sigma the stress.
struct State {
  double u = 0.0;
  double sigma = 0.0;

  bool finite() const { return std::isfinite(u) && std::isfinite(sigma); }
  friend bool operator==(const State& a, const State& b) {
    return a.u == b.u && a.sigma == b.sigma;
  }
};

/// Riemann data: left/right states plus the elasticity constant k >= 0.
struct RiemannData {
  State left;
  State right;
  double k = 0.0;
};

inline void ensure_valid(const State& s, const char* what = "state") {
  if (!s.finite()) throw NonFiniteValue(std::string(what) + " has non-finite component");
}

inline void ensure_valid(const RiemannData& d) {
  ensure_valid(d.left, "left state");
  ensure_valid(d.right, "right state");
  if (!std::isfinite(d.k) || d.k < 0.0) throw InvalidArgument("k must be finite and >= 0");
}

/// Orientation of a jump across a discontinuity. The two halves of the theory
/// use opposite conventions, so the orientation is always an explicit
/// parameter, never ambient state. Flipping the convention negates every jump.
enum class JumpConvention { RightMinusLeft, LeftMinusRight };

struct Jumps {
  double du = 0.0;        // [u]
  double dsigma = 0.0;    // [sigma]
  double dhalf_usq = 0.0; // [u^2/2], same orientation
};

inline Jumps jumps(const RiemannData& d, JumpConvention conv) {
  ensure_valid(d);
  if (conv == JumpConvention::RightMinusLeft) {
    return {d.right.u - d.left.u, d.right.sigma - d.left.sigma,
            (d.right.u * d.right.u - d.left.u * d.left.u) / 2.0};
  }
  return {d.left.u - d.right.u, d.left.sigma - d.right.sigma,
          (d.left.u * d.left.u - d.right.u * d.right.u) / 2.0};
}

/// Heaviside parameterization of Riemann data:
///   u(x,0) = u0 + u1 H(-x),  sigma(x,0) = sigma0 + sigma1 H(-x),
/// so u0 = u_R, u1 = u_L - u_R and likewise for sigma. Round-trips exactly.
struct HeavisideForm {
  double sigma0 = 0.0;
  double sigma1 = 0.0;
  double u0 = 0.0;
  double u1 = 0.0;
};

inline HeavisideForm to_heaviside_form(const RiemannData& d) {
  ensure_valid(d);
  return {d.right.sigma, d.left.sigma - d.right.sigma, d.right.u, d.left.u - d.right.u};
}

inline RiemannData from_heaviside_form(const HeavisideForm& h, double k = 0.0) {
  RiemannData d{{h.u0 + h.u1, h.sigma0 + h.sigma1}, {h.u0, h.sigma0}, k};
  ensure_valid(d);
  return d;
}

}  // namespace ncrs
