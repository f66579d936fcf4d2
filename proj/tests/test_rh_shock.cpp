#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "ncrs/rh_shock.hpp"

using namespace ncrs;

TEST_CASE("shock speed formula") {
  CHECK(shock_speed({{2.0, 0.0}, {0.0, -1.0}, 0.0}).s == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(shock_speed({{1.0, 7.0}, {-1.0, 7.0}, 0.0}).s == 0.0);
  CHECK(shock_speed({{2.0, 1.0}, {0.0, 0.0}, 0.0}).s == doctest::Approx(0.5).epsilon(1e-15));
  // the formula is shared by both systems
  CHECK(shock_speed({{2.0, 1.0}, {0.0, 0.0}, 1.0}).s == shock_speed({{2.0, 1.0}, {0.0, 0.0}, 0.0}).s);
  CHECK_THROWS_AS(shock_speed({{1.0, 2.0}, {1.0, 0.0}, 0.0}), ZeroVelocityJump);
}

TEST_CASE("rh residual on and off the shock curve") {
  const DlmPath phi = builtin_path(PathKind::PhiExample);
  // (2,0) -> (0,-1) lies on the k=0 curve of the kinked path
  const RiemannData on{{2.0, 0.0}, {0.0, -1.0}, 0.0};
  const RHResidual r = rh_residual(phi, on, shock_speed(on).s);
  CHECK(std::abs(r.row1) <= 1e-14);
  CHECK(std::abs(r.row2) <= 1e-14);
  CHECK(r.lax_ok);

  // straight line: row2 = [sigma]^2/[u] (right-minus-left), never zero with a sigma jump
  const DlmPath line = builtin_path(PathKind::StraightLine);
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    RiemannData d{{uni(rng), uni(rng)}, {uni(rng), uni(rng)}, 0.0};
    if (std::abs(d.left.u - d.right.u) < 1e-3) continue;
    const Jumps j = jumps(d, JumpConvention::RightMinusLeft);
    const RHResidual lr = rh_residual(line, d, shock_speed(d).s);
    CHECK(lr.row2 == doctest::Approx(j.dsigma * j.dsigma / j.du).epsilon(1e-11));
    // row1 telescopes to the closed form for any path
    CHECK(std::abs(lr.row1) <= 1e-12 * std::max(1.0, std::abs(j.dhalf_usq)));
  }

  // v_L = v_R: phi_t vanishes identically
  const RiemannData c{{1.5, 2.5}, {1.5, 2.5}, 0.0};
  const RHResidual rc = rh_residual(phi, c, 17.0);
  CHECK(rc.row1 == 0.0);
  CHECK(rc.row2 == 0.0);
}

TEST_CASE("row1 equals its closed form for arbitrary data and speed") {
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (PathKind k : {PathKind::StraightLine, PathKind::PhiExample, PathKind::PhiTildeExample}) {
    const DlmPath p = builtin_path(k);
    for (int i = 0; i < 100; ++i) {
      const RiemannData d{{uni(rng), uni(rng)}, {uni(rng), uni(rng)}, 0.0};
      const double s = uni(rng);
      const Jumps j = jumps(d, JumpConvention::RightMinusLeft);
      const double closed = -s * j.du + j.dhalf_usq - j.dsigma;
      CHECK(rh_residual(p, d, s).row1 == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("shock curve closed forms") {
  const State left{2.0, 0.0};
  CHECK(shock_curve_sigma({0.0, PathKind::PhiExample, ShockFamily::S1, left}, 0.0) == -1.0);
  CHECK(shock_curve_sigma({0.0, PathKind::PhiTildeExample, ShockFamily::S1, left}, 0.0) == -2.0);

  // k = 1: quadratic-formula oracle
  const double s17 = std::sqrt(17.0);
  CHECK(shock_curve_sigma({1.0, PathKind::PhiExample, ShockFamily::S1, left}, 0.0) ==
        doctest::Approx((-1.0 + s17) / 2.0).epsilon(1e-14));
  CHECK(shock_curve_sigma({1.0, PathKind::PhiExample, ShockFamily::S2, left}, 0.0) ==
        doctest::Approx((-1.0 - s17) / 2.0).epsilon(1e-14));
  const double s5 = std::sqrt(5.0);
  CHECK(shock_curve_sigma({1.0, PathKind::PhiTildeExample, ShockFamily::S1, left}, 0.0) ==
        doctest::Approx(-1.0 + s5).epsilon(1e-14));
  CHECK(shock_curve_sigma({1.0, PathKind::PhiTildeExample, ShockFamily::S2, left}, 0.0) ==
        doctest::Approx(-1.0 - s5).epsilon(1e-14));

  CHECK_THROWS_AS(shock_curve_sigma({0.0, PathKind::PhiExample, ShockFamily::S1, left}, 2.0),
                  LaxViolation);
  CHECK_THROWS_AS(shock_curve_sigma({0.0, PathKind::PhiExample, ShockFamily::S1, left}, 2.5),
                  LaxViolation);
  CHECK_THROWS_AS(shock_curve_sigma({0.0, PathKind::PhiExample, ShockFamily::S2, left}, 0.0),
                  InvalidFamily);
  CHECK_THROWS_AS(shock_curve_sigma({0.0, PathKind::StraightLine, ShockFamily::S1, left}, 0.0),
                  InvalidFamily);
}

TEST_CASE("sigma quadratic roots: examples, residuals and Vieta") {
  const SigmaJumpRoots r = sigma_quadratic_roots(-2.0, 1.0, PathKind::PhiExample);
  CHECK(r.s1 == doctest::Approx((-1.0 + std::sqrt(17.0)) / 2.0).epsilon(1e-14));
  CHECK(r.s2 == doctest::Approx((-1.0 - std::sqrt(17.0)) / 2.0).epsilon(1e-14));
  const SigmaJumpRoots rt = sigma_quadratic_roots(-2.0, 1.0, PathKind::PhiTildeExample);
  CHECK(rt.s1 == doctest::Approx(-1.0 + std::sqrt(5.0)).epsilon(1e-14));
  CHECK(rt.s2 == doctest::Approx(-1.0 - std::sqrt(5.0)).epsilon(1e-14));

  for (PathKind kind : {PathKind::PhiExample, PathKind::PhiTildeExample}) {
    const double a = kind == PathKind::PhiExample ? 4.0 : 2.0;
    for (double du : {-0.3, -2.0, 5.0, -7.0}) {
      for (double ratio = 1e-6; ratio <= 10.0; ratio *= 10.0) {
        const double k = ratio * std::abs(du);
        const SigmaJumpRoots roots = sigma_quadratic_roots(du, k, kind);
        for (double root : {roots.s1, roots.s2}) {
          const double res = a * root * root + du * du * root - a * k * k * du * du;
          const double scale = std::max({std::abs(a * root * root), std::abs(du * du * root),
                                         std::abs(a * k * k * du * du)});
          CHECK(std::abs(res) <= 1e-12 * scale);
        }
        // Vieta: product of roots = C/A = -k^2 du^2
        CHECK(roots.s1 * roots.s2 ==
              doctest::Approx(-k * k * du * du).epsilon(1e-12));
      }
    }
  }
  // S1 -> A k^2 as k -> 0 (Taylor of the radical)
  const SigmaJumpRoots tiny = sigma_quadratic_roots(-2.0, 1e-5, PathKind::PhiExample);
  CHECK(tiny.s1 == doctest::Approx(4e-10).epsilon(1e-6));
  CHECK_THROWS_AS(sigma_quadratic_roots(0.0, 1.0, PathKind::PhiExample), InvalidArgument);
  CHECK_THROWS_AS(sigma_quadratic_roots(-2.0, 0.0, PathKind::PhiExample), InvalidArgument);
  CHECK_THROWS_AS(sigma_quadratic_roots(-2.0, 1.0, PathKind::StraightLine), InvalidFamily);
}

TEST_CASE("k-limit degeneration at second order") {
  const std::vector<double> ladder{1e-1, 1e-2, 1e-3, 1e-4};
  const KLimitReport rp = k_limit_report({2.0, 0.0}, 0.0, PathKind::PhiExample, ladder);
  CHECK(rp.sigma_limit == -1.0);
  CHECK(rp.slope_s2 == doctest::Approx(2.0).epsilon(0.025));
  CHECK(rp.slope_s1 == doctest::Approx(2.0).epsilon(0.025));
  // Taylor oracle: |sigma_S2(k) - limit| ~ 4 k^2 for the kinked path
  CHECK(rp.s2_error.back() / (1e-4 * 1e-4) == doctest::Approx(4.0).epsilon(1e-4));

  const KLimitReport rpt = k_limit_report({2.0, 0.0}, 0.0, PathKind::PhiTildeExample, ladder);
  CHECK(rpt.slope_s2 == doctest::Approx(2.0).epsilon(0.025));
  CHECK(rpt.s2_error.back() / (1e-4 * 1e-4) == doctest::Approx(2.0).epsilon(1e-4));

  CHECK_THROWS_AS(k_limit_report({2.0, 0.0}, 0.0, PathKind::PhiExample,
                                 std::vector<double>{1e-1, 0.0}),
                  InvalidArgument);
  CHECK_THROWS_AS(k_limit_report({2.0, 0.0}, 0.0, PathKind::PhiExample,
                                 std::vector<double>{1e-3, 1e-2}),
                  InvalidArgument);
  CHECK_THROWS_AS(
      k_limit_report({2.0, 0.0}, 3.0, PathKind::PhiExample, std::vector<double>{1e-1, 1e-2}),
      LaxViolation);
}

TEST_CASE("S2 approaches the limit monotonically from below") {
  std::mt19937_64 rng(909);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  std::uniform_real_distribution<double> dstep(0.2, 3.0);
  for (PathKind kind : {PathKind::PhiExample, PathKind::PhiTildeExample}) {
    for (int i = 0; i < 100; ++i) {
      const State left{uni(rng), uni(rng)};
      const double u = left.u - dstep(rng);
      const double limit = shock_curve_sigma({0.0, kind, ShockFamily::S1, left}, u);
      double prev = -std::numeric_limits<double>::infinity();
      for (double k : {0.5, 0.1, 0.02, 0.004}) {
        const double s2 = shock_curve_sigma({k, kind, ShockFamily::S2, left}, u);
        CHECK(s2 < limit);
        CHECK(s2 > prev);
        prev = s2;
      }
    }
  }
}

TEST_CASE("volpert product admits no shock with a sigma jump") {
  const VolpertClassification no = volpert_shock_exists({{2.0, 1.0}, {0.0, 0.0}, 0.0});
  CHECK(no.kind == VolpertKind::NoShock);
  CHECK(no.sigma_jump == -1.0);

  const VolpertClassification b = volpert_shock_exists({{2.0, 5.0}, {0.0, 5.0}, 0.0});
  CHECK(b.kind == VolpertKind::BurgersShock);
  CHECK(b.speed == 1.0);

  CHECK(volpert_shock_exists({{0.0, 5.0}, {2.0, 5.0}, 0.0}).kind == VolpertKind::NotAShock);
  CHECK(volpert_shock_exists({{1.0, 1.0}, {1.0, 1.0}, 0.0}).kind == VolpertKind::ConstantState);

  // eliminating s: the second relation forces s = (u_L+u_R)/2, which the
  // first relation turns into [sigma] = 0, so any sigma jump is a witness
  std::mt19937_64 rng(111);
  std::uniform_real_distribution<double> uni(-5.0, 5.0);
  for (int i = 0; i < 500; ++i) {
    RiemannData d{{uni(rng), uni(rng)}, {uni(rng), uni(rng)}, 0.0};
    if (d.left.sigma == d.right.sigma) continue;
    CHECK(volpert_shock_exists(d).kind == VolpertKind::NoShock);
    const Jumps j = jumps(d, JumpConvention::RightMinusLeft);
    const double s = 0.5 * (d.left.u + d.right.u);
    const double first_relation = -s * j.du + j.dhalf_usq - j.dsigma;
    CHECK(first_relation == doctest::Approx(-j.dsigma).epsilon(1e-10));
  }
}

TEST_CASE("rarefaction classification") {
  const RarefactionClassification imp = rarefaction_possible({{0.0, 1.0}, {2.0, 0.0}, 0.0});
  CHECK(imp.kind == RarefactionKind::Impossible);
  CHECK_FALSE(imp.reason.empty());
  CHECK(rarefaction_possible({{0.0, 5.0}, {2.0, 5.0}, 0.0}).kind ==
        RarefactionKind::TrivialConstantSigma);
  CHECK(rarefaction_possible({{0.0, 1.0}, {2.0, 0.0}, 1.0}).kind ==
        RarefactionKind::NotApplicable);
}

TEST_CASE("rh residual vanishes on every sampled curve point") {
  std::mt19937_64 rng(212);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  std::uniform_real_distribution<double> dstep(0.1, 4.0);
  std::uniform_real_distribution<double> kk(0.05, 2.0);
  for (PathKind kind : {PathKind::PhiExample, PathKind::PhiTildeExample}) {
    const DlmPath path = builtin_path(kind);
    for (int i = 0; i < 150; ++i) {
      const State left{uni(rng), uni(rng)};
      const double u = left.u - dstep(rng);
      for (double k : {0.0, kk(rng)}) {
        for (ShockFamily fam : {ShockFamily::S1, ShockFamily::S2}) {
          if (k == 0.0 && fam == ShockFamily::S2) continue;
          const double sigma = shock_curve_sigma({k, kind, fam, left}, u);
          const RiemannData d{left, {u, sigma}, k};
          const RHResidual r = rh_residual(path, d, shock_speed(d).s);
          CHECK(std::abs(r.row1) <= 1e-10);
          CHECK(std::abs(r.row2) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("curve sampler emits plot-ready rows") {
  std::ostringstream out;
  const std::vector<double> ks{0.0, 1.0};
  sample_shock_curves_csv(out, {2.0, 0.0}, ks, PathKind::PhiExample, -2.0, 4);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "u,sigma,family,k,path_kind");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4 + 2 * 4);  // limit rows for k=0, two branches for k=1
}
