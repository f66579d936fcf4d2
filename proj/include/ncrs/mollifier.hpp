#pragma once

#include "ncrs/core.hpp"

// The smoothing kernel for the regularized ansatz: a smooth, even,
// non-negative function with support in (-1,1) and unit mass. omega0 = int
// omega^2 fixes the amplitude of the velocity correction term.

namespace ncrs {

namespace detail {
/// exp(-1/(1-x^2)) on (-1,1), zero outside (unnormalized).
double std_bump(double x);
double std_bump_deriv(double x);
/// Unit-mass normalization constant 1/int std_bump.
double std_bump_norm();
}  // namespace detail

enum class MollifierKind { Bump };

struct Mollifier {
  MollifierKind kind = MollifierKind::Bump;
  double norm = 0.0;    // 1 / int bump
  double omega0 = 0.0;  // int omega^2

  double operator()(double x) const { return norm * detail::std_bump(x); }
  double deriv(double x) const { return norm * detail::std_bump_deriv(x); }
};

/// Builds the normalized kernel; the normalization constant and omega0 are
/// computed once by adaptive quadrature to <= 1e-12 absolute error.
Mollifier make_mollifier(MollifierKind kind = MollifierKind::Bump);

}  // namespace ncrs
