// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "udw/kinematics.hpp"

using namespace udw;

// high-precision anchors (mpmath, 30 digits)
namespace {
constexpr double kAcosh2 = 1.31695789692481670862504634731;
constexpr double kAcosh15 = 0.962423650119206894995517826849;
constexpr double kLn2 = 0.693147180559945309417232121458;
constexpr double kLn3 = 1.09861228866810969139524523692;
constexpr double kSqrt3 = 1.73205080756887729352744634151;
constexpr double kSqrt075 = 0.866025403784438646763723170753;
constexpr double kSinh1 = 1.1752011936438014568823818506;
constexpr double kCosh1m1 = 0.543080634815243778477905620757;
}  // namespace

TEST_CASE("uniformly accelerated worldline") {
  auto p0 = accel_trajectory(1.0, 0.0);
  CHECK(p0.t == 0.0);
  CHECK(p0.x == 0.0);

  auto p1 = accel_trajectory(1.0, 1.0);
  CHECK(p1.t == doctest::Approx(kSinh1).epsilon(1e-15));
  CHECK(p1.x == doctest::Approx(kCosh1m1).epsilon(1e-15));

  CHECK_THROWS_AS(accel_trajectory(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(accel_trajectory(-1.0, 1.0), DomainError);
}

TEST_CASE("hyperbola identity (x + 1/a)^2 - t^2 = 1/a^2") {
  // Keep a*tau moderate: evaluating the difference of squares in double
  // loses ~cosh(a tau)^2 * eps absolute, which swamps a 1e-12 relative
  // check once a*tau exceeds ~4.  The identity itself is scale-free.
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> da(0.05, 1.75), dtau(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = da(rng), tau = dtau(rng);
    auto p = accel_trajectory(a, tau);
    const double lhs = (p.x + 1.0 / a) * (p.x + 1.0 / a) - p.t * p.t;
    CHECK(lhs == doctest::Approx(1.0 / (a * a)).epsilon(1e-12));
  }
}

TEST_CASE("proper-time normalization of the trajectory") {
  // (dt/dtau)^2 - (dx/dtau)^2 = 1, central differences
  const double h = 1e-5;
  for (double a : {0.3, 1.0, 2.5}) {
    for (double tau : {-1.0, 0.2, 1.7}) {
      auto pp = accel_trajectory(a, tau + h);
      auto pm = accel_trajectory(a, tau - h);
      const double dt = (pp.t - pm.t) / (2.0 * h);
      const double dx = (pp.x - pm.x) / (2.0 * h);
      CHECK(dt * dt - dx * dx == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("detector traversal time") {
  CHECK(traversal_time_detector(1.0, 1.0, Anchor::FullTraversal) ==
        doctest::Approx(kAcosh2).epsilon(1e-15));
  CHECK(traversal_time_detector(1.0, 1.0, Anchor::Midpoint) ==
        doctest::Approx(kAcosh15).epsilon(1e-15));
  // slow-acceleration asymptote arccosh(1 + aL)/a -> sqrt(2L/a)
  const double a = 1e-4;
  const double ratio =
      traversal_time_detector(a, 1.0, Anchor::FullTraversal) / std::sqrt(2.0 / a);
  CHECK(ratio == doctest::Approx(1.0).epsilon(1e-2));
  CHECK_THROWS_AS(traversal_time_detector(0.0, 1.0, Anchor::FullTraversal),
                  DomainError);
}

TEST_CASE("conformal cavity length") {
  CHECK(conformal_cavity_length(1.0, 1.0, Anchor::FullTraversal) ==
        doctest::Approx(kLn2).epsilon(1e-15));
  CHECK(conformal_cavity_length(1e-6, 1.0, Anchor::FullTraversal) ==
        doctest::Approx(1.0).epsilon(1e-6));
  // midpoint walls sit at 1/a -+ L/2: L' = log((2+aL)/(2-aL))/a = ln 3 here
  CHECK(conformal_cavity_length(1.0, 1.0, Anchor::Midpoint) ==
        doctest::Approx(kLn3).epsilon(1e-15));
  CHECK_THROWS_AS(conformal_cavity_length(2.0, 1.0, Anchor::Midpoint),
                  RigidityError);

  // roundtrip L = (e^{a L'} - 1)/a
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> da(0.05, 3.0), dL(0.1, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double a = da(rng), L = dL(rng);
    const double Lp = conformal_cavity_length(a, L, Anchor::FullTraversal);
    CHECK(std::expm1(a * Lp) / a == doctest::Approx(L).epsilon(1e-12));
  }
}

TEST_CASE("cavity traversal time") {
  CHECK(traversal_time_cavity(1.0, 1.0, Anchor::FullTraversal) ==
        doctest::Approx(kSqrt3).epsilon(1e-15));
  CHECK(traversal_time_cavity(1.0, 1.0, Anchor::Midpoint) ==
        doctest::Approx(kSqrt075).epsilon(1e-15));
  CHECK(traversal_time_cavity(1.0, 1e-12, Anchor::FullTraversal) < 2e-6);
  CHECK_THROWS_AS(traversal_time_cavity(3.0, 1.0, Anchor::Midpoint),
                  RigidityError);
}

TEST_CASE("Rindler chart") {
  auto r = lab_to_rindler({0.0, 1.0});
  CHECK(r.eta == 0.0);
  CHECK(r.xi == 1.0);

  auto p = rindler_to_lab({1.0, 2.0});
  CHECK(p.t == doctest::Approx(2.0 * kSinh1).epsilon(1e-15));
  CHECK(p.x == doctest::Approx(2.0 * (kCosh1m1 + 1.0)).epsilon(1e-15));

  CHECK_THROWS_AS(lab_to_rindler({1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(lab_to_rindler({0.0, -1.0}), DomainError);
}

TEST_CASE("chart roundtrips on random wedge points") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dxi(0.05, 10.0), deta(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    RindlerPoint rp{deta(rng), dxi(rng)};
    auto lab = rindler_to_lab(rp);
    auto back = lab_to_rindler(lab);
    CHECK(back.eta == doctest::Approx(rp.eta).epsilon(1e-12));
    CHECK(back.xi == doctest::Approx(rp.xi).epsilon(1e-12));

    const double a = 0.7;
    auto cp = lab_to_conformal(a, lab);
    auto lab2 = conformal_to_lab(a, cp);
    CHECK(lab2.t == doctest::Approx(lab.t).epsilon(1e-12));
    CHECK(lab2.x == doctest::Approx(lab.x).epsilon(1e-12));
    // chart identity xi = e^{a zeta}/a
    CHECK(std::exp(a * cp.zeta) / a == doctest::Approx(rp.xi).epsilon(1e-12));
  }
}

TEST_CASE("conformal chart anchors") {
  auto c = lab_to_conformal(1.0, {0.0, 1.0});
  CHECK(c.varsigma == 0.0);
  CHECK(c.zeta == 0.0);
  auto c2 = lab_to_conformal(1.0, {0.0, 2.0});
  CHECK(c2.zeta == doctest::Approx(kLn2).epsilon(1e-15));
}

TEST_CASE("static detector path in the accelerating cavity") {
  ScenarioConfig cfg;
  cfg.kind = ScenarioKind::AcceleratingCavity;
  cfg.a = 1.0;
  cfg.L = 1.0;
  cfg.anchor = Anchor::FullTraversal;

  auto tr = static_detector_path(cfg);
  CHECK(tr.x_d == 2.0);
  CHECK(tr.xi(0.0) == 2.0);
  CHECK(tr.eta(0.0) == 0.0);
  CHECK(tr.t_max == doctest::Approx(kSqrt3).epsilon(1e-15));
  // exit condition: path meets the rear wall, a sqrt(x_d^2 - t^2) = 1
  CHECK(tr.xi(tr.t_max) == doctest::Approx(tr.xi1).epsilon(1e-10));

  // strictly decreasing xi(t) on (0, t_max)
  double prev = tr.xi(0.0);
  for (int i = 1; i <= 50; ++i) {
    const double t = tr.t_max * i / 50.0 * 0.9999;
    const double cur = tr.xi(t);
    CHECK(cur < prev);
    prev = cur;
  }

  cfg.anchor = Anchor::Midpoint;
  auto trm = static_detector_path(cfg);
  CHECK(trm.x_d == 1.0);
  CHECK(trm.xi1 == 0.5);
  CHECK(trm.xi2 == 1.5);
  CHECK(trm.t_max == doctest::Approx(kSqrt075).epsilon(1e-15));
  CHECK(trm.xi(trm.t_max) == doctest::Approx(trm.xi1).epsilon(1e-10));

  cfg.kind = ScenarioKind::AcceleratingDetector;
  CHECK_THROWS_AS(static_detector_path(cfg), UsageError);
}

TEST_CASE("rigid acceleration profile") {
  CHECK(proper_accel_profile(2.0, 0.0, 0.0) == 2.0);
  CHECK(proper_accel_profile(1.0, 1.0, 0.0) == 0.5);
  // centre of a rigid cavity: a_c -> 2/L as the rear-wall acceleration blows up
  CHECK(proper_accel_profile(1e6, 0.5, 0.0) == doctest::Approx(2.0).epsilon(1e-5));

  double prev = proper_accel_profile(1.5, 0.0, 0.0);
  for (double x = 0.1; x < 3.0; x += 0.1) {
    const double cur = proper_accel_profile(1.5, x, 0.0);
    CHECK(cur < prev);
    prev = cur;
  }

  CHECK_THROWS_AS(proper_accel_profile(0.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(proper_accel_profile(1.0, -0.5, 0.0), DomainError);
}

TEST_CASE("scenario config validation") {
  ScenarioConfig ok;
  ok.validate();  // defaults are valid

  ScenarioConfig zero_a = ok;
  zero_a.a = 0.0;
  CHECK_THROWS_AS(zero_a.validate(), UsageError);
  zero_a.anchor = Anchor::Midpoint;
  zero_a.validate();  // a = 0 allowed at the midpoint

  ScenarioConfig rigid = ok;
  rigid.kind = ScenarioKind::AcceleratingCavity;
  rigid.anchor = Anchor::Midpoint;
  rigid.a = 2.0;
  CHECK_THROWS_AS(rigid.validate(), RigidityError);
  rigid.a = 1.9999;
  rigid.validate();

  ScenarioConfig bad = ok;
  bad.L = 0.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = ok;
  bad.m = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = ok;
  bad.a = -0.1;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("string conversions") {
  CHECK(scenario_kind_from_string("AcceleratingDetector") ==
        ScenarioKind::AcceleratingDetector);
  CHECK(scenario_kind_from_string("AcceleratingCavity") ==
        ScenarioKind::AcceleratingCavity);
  CHECK_THROWS_AS(scenario_kind_from_string("bogus"), UsageError);
  CHECK(anchor_from_string("FullTraversal") == Anchor::FullTraversal);
  CHECK(anchor_from_string("Midpoint") == Anchor::Midpoint);
  CHECK_THROWS_AS(anchor_from_string(""), UsageError);
}
