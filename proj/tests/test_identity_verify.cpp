#include <doctest.h>

#include <cmath>
#include <random>

#include "ncrs/identity_verify.hpp"
#include "ncrs/quadrature.hpp"
#include "ncrs/weak_asymptotics.hpp"

using namespace ncrs;

namespace {

RiemannData random_admissible(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uu0(-2.0, 2.0), uu1(0.1, 3.0), us0(-2.0, 2.0),
      ur(-0.9, 0.9);
  const double u0 = uu0(rng), u1 = uu1(rng);
  const double sigma1 = ur(rng) * 0.5 * u1 * u1;  // sigma1/u1 strictly inside (-u1/2, u1/2)
  return from_heaviside_form({us0(rng), sigma1, u0, u1});
}

}  // namespace

TEST_CASE("volpert average is the mean of the traces") {
  CHECK(volpert_average(2.0, 0.0) == 1.0);
  CHECK(volpert_average(-3.25, -3.25) == -3.25);
  CHECK(volpert_average(0.0, -4.0) == -2.0);
}

TEST_CASE("analytic balance vanishes identically") {
  CHECK(analytic_balance({{2.0, 1.0}, {0.0, 0.0}, 0.0}) <= 1e-16);
  CHECK(analytic_balance({{2.0, 3.0}, {0.0, 3.0}, 0.0}) == 0.0);
  std::mt19937_64 rng(616);
  std::uniform_real_distribution<double> uni(-4.0, 4.0);
  for (int i = 0; i < 10000; ++i) {
    RiemannData d{{uni(rng), uni(rng)}, {uni(rng), uni(rng)}, 0.0};
    // a tiny velocity jump inflates sigma1/u1 beyond any absolute bound
    if (std::abs(d.left.u - d.right.u) < 0.05) continue;
    CHECK(analytic_balance(d) <= 1e-12);
  }
  CHECK_THROWS_AS(analytic_balance({{1.0, 2.0}, {1.0, 0.0}, 0.0}), ZeroVelocityJump);
}

TEST_CASE("identity residuals vanish for the constructed solution") {
  const DeltaShockSolution sol = build_delta_shock({{2.0, 1.0}, {0.0, 0.0}, 0.0});
  // boxes on the front, away from it, and touching t = 0
  for (const TestFunction& th :
       {make_test_function(0.75, 1.5, 1.5, 1.0), make_test_function(0.5, 2.0, 1.0, 1.2),
        make_test_function(-2.0, 1.0, 1.0, 0.8), make_test_function(0.2, 1.5, 0.3, 0.5, 2)}) {
    const IdentityResidualPair r = identity_residuals(sol, th);
    CHECK(r.id1 <= 1e-10);
    CHECK(r.id2 <= 1e-10);
  }
}

TEST_CASE("identity residuals vanish for constant data") {
  const DeltaShockSolution constant{{{1.0, 2.0}, {1.0, 2.0}, 0.0}, 0.7, 0.0};
  const IdentityResidualPair r = identity_residuals(constant, make_test_function(0.5, 1.5, 0.6, 1.0));
  CHECK(r.id1 <= 1e-10);
  CHECK(r.id2 <= 1e-10);
}

TEST_CASE("wrong front speed leaves a flux-jump defect") {
  const RiemannData datum{{2.0, 1.0}, {0.0, 0.0}, 0.0};
  const TestFunction th = make_test_function(1.0, 2.0, 1.5, 1.0);
  const DeltaShockSolution good = build_delta_shock(datum);
  const Jumps j = jumps(datum, JumpConvention::LeftMinusRight);

  for (double ds : {0.05, 0.1, -0.05, 0.2}) {
    DeltaShockSolution bad = good;
    bad.s += ds;
    const IdentityResidualPair r = identity_residuals(bad, th);
    // the defect is exactly |ds [u] int theta(front(t), t) dt|
    const double mass = quad::composite([&](double t) { return th.value(bad.s * t, t); },
                                        std::max(0.0, th.t_lo()), th.t_hi(),
                                        quad::gauss_legendre(16), 64);
    CHECK(r.id1 == doctest::Approx(std::abs(ds * j.du * mass)).epsilon(1e-8));
    CHECK(r.id1 >= std::abs(ds) * std::abs(j.du) * std::abs(mass) / 2.0);
    CHECK(r.id1 > 1e-4);
  }
}

TEST_CASE("identities hold across randomized admissible data and test functions") {
  std::mt19937_64 rng(717);
  std::uniform_real_distribution<double> uw(0.8, 2.5), ut(0.5, 1.6), uc(0.3, 2.2),
      shift(-0.5, 0.5);
  for (int i = 0; i < 25; ++i) {
    const RiemannData d = random_admissible(rng);
    const DeltaShockSolution sol = build_delta_shock(d);
    for (int k = 0; k < 3; ++k) {
      const double ct = uc(rng), wt = ut(rng);
      const TestFunction th =
          make_test_function(sol.s * ct + shift(rng), uw(rng), ct, wt, k % 3 == 2 ? 2 : 0);
      const IdentityResidualPair r = identity_residuals(sol, th);
      CHECK(r.id1 <= 1e-10);
      CHECK(r.id2 <= 1e-10);
    }
  }
}

TEST_CASE("identity residual agrees with the mollified route in the limit") {
  // sandwich: the exact-identity residual differs from the eps pairing by
  // less than the next-coarser pairing
  const RiemannData datum{{2.0, 1.0}, {0.0, 0.0}, 0.0};
  const TestFunction th = make_test_function(0.75, 1.5, 1.5, 1.0);
  const DeltaShockSolution sol = build_delta_shock(datum);
  const IdentityResidualPair id = identity_residuals(sol, th);
  const WeakResidual fine = weak_residual(build_ansatz(datum, std::ldexp(1.0, -9)), th);
  const WeakResidual coarse = weak_residual(build_ansatz(datum, std::ldexp(1.0, -8)), th);
  CHECK(std::abs(id.id1 - fine.r1) <= coarse.r1);
  CHECK(std::abs(id.id2 - fine.r2) <= coarse.r2);
}
