// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "udw/field_state.hpp"

using namespace udw;
using cplx = std::complex<double>;

namespace {

ScenarioConfig detector_cfg(double a) {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::AcceleratingDetector;
  cfg.a = a;
  cfg.L = 1.0;
  cfg.m = 0.0;
  cfg.anchor = Anchor::FullTraversal;
  return cfg;
}

ScenarioConfig cavity_cfg(double a) {
  ScenarioConfig cfg = detector_cfg(a);
  cfg.kind = ScenarioKind::AcceleratingCavity;
  return cfg;
}

}  // namespace

TEST_CASE("vacuum Wightman equals the manual mode sum (scenario D)") {
  ScenarioContext ctx(detector_cfg(1.0), 3);
  // Fully independent assembly: static massless modes along x = cosh(tau)-1,
  // phases w_n sinh(tau).
  auto manual = [](double tau, double taup) {
    cplx w{0.0, 0.0};
    for (int n = 1; n <= 3; ++n) {
      const double wn = n * M_PI;
      const double u1 = std::sin(wn * (std::cosh(tau) - 1.0)) / std::sqrt(wn);
      const double u2 = std::sin(wn * (std::cosh(taup) - 1.0)) / std::sqrt(wn);
      w += u1 * u2 *
           std::exp(cplx(0.0, -wn * (std::sinh(tau) - std::sinh(taup))));
    }
    return w;
  };
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dt(0.0, 1.3169);
  for (int i = 0; i < 50; ++i) {
    const double t1 = dt(rng), t2 = dt(rng);
    const cplx got = wightman_vacuum(ctx, t1, t2);
    const cplx want = manual(t1, t2);
    CHECK(got.real() == doctest::Approx(want.real()).epsilon(1e-13));
    CHECK(got.imag() == doctest::Approx(want.imag()).epsilon(1e-13));
  }
}

TEST_CASE("Wightman hermiticity W(t,t') = conj W(t',t)") {
  const FieldState states[] = {VacuumState{}, FockState{2, 3},
                               CoherentState{1, {0.4, -0.7}}};
  for (const auto& cfg : {detector_cfg(0.8), cavity_cfg(0.8)}) {
    ScenarioContext ctx(cfg, 4);
    const double tmax = ctx.traversal_time();
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dt(0.0, tmax);
    for (const auto& st : states) {
      for (int i = 0; i < 20; ++i) {
        const double t1 = dt(rng), t2 = dt(rng);
        const cplx w12 = wightman(ctx, st, t1, t2);
        const cplx w21 = wightman(ctx, st, t2, t1);
        CHECK(w12.real() == doctest::Approx(w21.real()).epsilon(1e-13));
        CHECK(w12.imag() == doctest::Approx(-w21.imag()).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("Fock excess is 2 n_k u u' cos(w_k dT)") {
  ScenarioContext ctx(cavity_cfg(1.0), 4);
  const FockState fock{2, 5};
  const double t1 = 0.3, t2 = 1.1;
  const double u1 = ctx.mode_at(2, t1);
  const double u2 = ctx.mode_at(2, t2);
  const double dT = ctx.time_coord(t1) - ctx.time_coord(t2);
  const cplx want = 5.0 * u1 * u2 * 2.0 * std::cos(ctx.omega(2) * dT);
  const cplx got = wightman_fock_excess(ctx, fock, t1, t2);
  CHECK(got.real() == doctest::Approx(want.real()).epsilon(1e-14));
  CHECK(got.imag() == 0.0);
  // and wightman() composes vacuum + excess
  const cplx total = wightman(ctx, FieldState{fock}, t1, t2);
  const cplx vac = wightman_vacuum(ctx, t1, t2);
  CHECK(total.real() == doctest::Approx((vac + want).real()).epsilon(1e-13));
}

TEST_CASE("coherent one-point function and excess") {
  ScenarioContext ctx(detector_cfg(0.5), 3);
  const CoherentState coh{1, {0.3, 0.2}};
  const double t1 = 0.4, t2 = 0.9;
  const cplx j1 = one_point_J(ctx, coh, t1);
  const cplx want_j =
      coh.alpha * ctx.mode_at(1, t1) *
      std::exp(cplx(0.0, -ctx.omega(1) * ctx.time_coord(t1)));
  CHECK(std::abs(j1 - want_j) < 1e-15);

  const cplx j2 = one_point_J(ctx, coh, t2);
  CHECK(wightman_coherent_excess(ctx, coh, t1, t2) ==
        doctest::Approx(4.0 * j1.real() * j2.real()).epsilon(1e-14));
}

TEST_CASE("everything vanishes once the detector leaves the cavity") {
  for (const auto& cfg : {detector_cfg(1.0), cavity_cfg(1.0)}) {
    ScenarioContext ctx(cfg, 3);
    const double after = ctx.traversal_time() * 1.5;
    CHECK(ctx.mode_at(1, after) == 0.0);
    CHECK(wightman_vacuum(ctx, after, 0.5) == cplx(0.0, 0.0));
    CHECK(wightman_vacuum(ctx, 0.5, after) == cplx(0.0, 0.0));
    CHECK(wightman_fock_excess(ctx, FockState{1, 1}, after, 0.5) ==
          cplx(0.0, 0.0));
    CHECK(one_point_J(ctx, CoherentState{1, {1.0, 0.0}}, after) ==
          cplx(0.0, 0.0));
    CHECK(wightman_coherent_excess(ctx, CoherentState{1, {1.0, 0.0}}, after,
                                   0.5) == 0.0);
  }
  // Far past the wedge chart of the accelerating cavity (|t| > x_d) the
  // support cutoff must fire before any coordinate is evaluated.
  ScenarioContext ctx(cavity_cfg(1.0), 3);
  const double way_after = 10.0;  // x_d = 2 here
  CHECK(ctx.mode_at(2, way_after) == 0.0);
  CHECK(std::isfinite(wightman_vacuum(ctx, way_after, 0.1).real()));
}

TEST_CASE("state validation") {
  ScenarioContext ctx(detector_cfg(1.0), 3);
  CHECK_THROWS_AS(validate_state(FockState{0, 1}, ctx), DomainError);
  CHECK_THROWS_AS(validate_state(FockState{4, 1}, ctx), DomainError);
  CHECK_THROWS_AS(validate_state(FockState{1, -2}, ctx), DomainError);
  CHECK_THROWS_AS(validate_state(CoherentState{7, {1.0, 0.0}}, ctx),
                  DomainError);
  CHECK_NOTHROW(validate_state(VacuumState{}, ctx));
  CHECK_NOTHROW(validate_state(FockState{3, 0}, ctx));
}

TEST_CASE("conformal and direct Rindler bases give the same physics") {
  ScenarioContext conf(cavity_cfg(0.7), 4, MasslessBasis::Conformal);
  ScenarioContext dir(cavity_cfg(0.7), 4, MasslessBasis::DirectRindler);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dt(0.0, conf.traversal_time());
  for (int i = 0; i < 30; ++i) {
    const double t1 = dt(rng), t2 = dt(rng);
    const cplx w1 = wightman_vacuum(conf, t1, t2);
    const cplx w2 = wightman_vacuum(dir, t1, t2);
    CHECK(w1.real() == doctest::Approx(w2.real()).epsilon(1e-12));
    CHECK(w1.imag() == doctest::Approx(w2.imag()).epsilon(1e-12));
    // mode-level: same profile values and identical phases w_n T
    for (int n = 1; n <= 4; ++n) {
      CHECK(conf.mode_at(n, t1) ==
            doctest::Approx(dir.mode_at(n, t1)).epsilon(1e-12));
      CHECK(conf.omega(n) * conf.time_coord(t1) ==
            doctest::Approx(dir.omega(n) * dir.time_coord(t1))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("scenario context bookkeeping") {
  ScenarioContext d(detector_cfg(1.0), 5);
  CHECK(d.n_modes() == 5);
  CHECK(!d.is_static());
  CHECK(d.traversal_time() == doctest::Approx(std::acosh(2.0)).epsilon(1e-15));
  CHECK(d.time_coord(0.5) == doctest::Approx(std::sinh(0.5)).epsilon(1e-15));
  // entry and exit pin the support
  CHECK(d.mode_at(1, 0.0) == 0.0);  // starts at the rear wall, sin(0)
  CHECK(d.mode_at(1, d.traversal_time() * 1.01) == 0.0);

  ScenarioContext c(cavity_cfg(1.0), 5);
  CHECK(c.traversal_time() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(c.time_coord(0.5) ==
        doctest::Approx(std::atanh(0.25)).epsilon(1e-14));

  ScenarioConfig st = detector_cfg(0.0);
  st.anchor = Anchor::Midpoint;
  ScenarioContext s(st, 4);
  CHECK(s.is_static());
  CHECK(std::isinf(s.traversal_time()));
  CHECK(s.time_coord(2.5) == 2.5);
  // detector at the centre couples only to odd modes
  CHECK(s.mode_at(2, 1.0) == doctest::Approx(0.0));
  CHECK(std::abs(s.mode_at(1, 1.0)) > 0.1);

  CHECK_THROWS_AS(ScenarioContext(detector_cfg(1.0), 0), DomainError);
}
