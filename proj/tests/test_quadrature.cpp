// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "udw/quadrature.hpp"

using namespace udw;
using cplx = std::complex<double>;

TEST_CASE("polynomials are integrated exactly") {
  auto r = integrate_real([](double x) { return x * x; }, 0.0, 1.0);
  CHECK(r.value.real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // degree 13: still inside the Kronrod exactness degree
  auto r2 = integrate_real([](double x) { return 14.0 * std::pow(x, 13); }, 0.0, 1.0);
  CHECK(r2.value.real() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("smooth transcendental integrands") {
  auto r = integrate_real([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(r.err_est < 1e-10);

  // integrable endpoint singularity; nodes never touch the endpoints
  auto rlog = integrate_real([](double x) { return std::log(x); }, 0.0, 1.0);
  CHECK(rlog.value.real() == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("oscillatory integrals against closed forms") {
  // int_0^1 e^{i w t} dt = (e^{i w} - 1) / (i w)
  const double w = 200.0;
  auto f = [w](double t) { return std::exp(cplx(0.0, w * t)); };
  auto r = integrate_oscillatory(f, 0.0, 1.0, {}, w);
  const cplx exact = (std::exp(cplx(0.0, w)) - 1.0) / cplx(0.0, w);
  CHECK(std::abs(r.value - exact) < 1e-12);

  // chirp: int_0^1 t e^{i a t^2} dt = (e^{i a} - 1) / (2 i a); max rate 2a
  const double aa = 100.0;
  auto g = [aa](double t) { return t * std::exp(cplx(0.0, aa * t * t)); };
  auto rg = integrate_oscillatory(g, 0.0, 1.0, {}, 2.0 * aa);
  const cplx exactg = (std::exp(cplx(0.0, aa)) - 1.0) / cplx(0.0, 2.0 * aa);
  CHECK(std::abs(rg.value - exactg) < 1e-12);

  // full period of a fast phase integrates to ~0; guard keeps it honest
  auto h = [](double t) { return std::exp(cplx(0.0, 50.0 * t)); };
  auto rh = integrate_oscillatory(h, 0.0, 2.0 * M_PI, {}, 50.0);
  CHECK(std::abs(rh.value) < 1e-12);
}

TEST_CASE("oscillation guard panel count") {
  CHECK(guarded_panel_count(0.0, 1.0, 0.0) == 1);
  // width * rate * 8 / (2 pi) = 64
  CHECK(guarded_panel_count(0.0, 2.0 * M_PI, 8.0) == 64);
  CHECK(guarded_panel_count(0.0, 1.0, 1e-8) == 1);
  CHECK_THROWS_AS(guarded_panel_count(0.0, 1.0, 1e9), AccuracyError);
}

TEST_CASE("subdivision budget exhaustion raises AccuracyError") {
  QuadratureSpec tight;
  tight.rel_tol = 1e-13;
  tight.abs_tol = 1e-300;
  tight.max_subdivisions = 3;
  auto nasty = [](double x) { return std::pow(x, -0.9); };
  CHECK_THROWS_AS(integrate_real(nasty, 0.0, 1.0, tight), AccuracyError);
  try {
    integrate_real(nasty, 0.0, 1.0, tight);
  } catch (const AccuracyError& e) {
    CHECK(e.err_est() > 0.0);
  }
}

TEST_CASE("tolerances are honoured and reported") {
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  auto f = [](double x) { return std::exp(-x) * std::cos(5.0 * x); };
  auto r = integrate_real(f, 0.0, 10.0, spec, 5.0);
  // closed form: Re int e^{(-1+5i)x} = (1 - e^{-10}(cos 50 - 5 sin 50)) / 26
  const double exact =
      (1.0 - std::exp(-10.0) * (std::cos(50.0) - 5.0 * std::sin(50.0))) / 26.0;
  CHECK(r.value.real() == doctest::Approx(exact).epsilon(1e-11));
  CHECK(r.err_est <= std::max(spec.abs_tol, spec.rel_tol * std::abs(exact)) * 1.0001);
}

TEST_CASE("deterministic: same input gives bit-identical output") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  for (int rep = 0; rep < 5; ++rep) {
    const double w = 40.0 * dist(rng);
    auto f = [w](double t) { return std::exp(cplx(0.0, w * t)) / (1.0 + t); };
    auto r1 = integrate_oscillatory(f, 0.0, 3.0, {}, w);
    auto r2 = integrate_oscillatory(f, 0.0, 3.0, {}, w);
    CHECK(r1.value.real() == r2.value.real());
    CHECK(r1.value.imag() == r2.value.imag());
    CHECK(r1.n_evals == r2.n_evals);
  }
}

TEST_CASE("degenerate interval") {
  auto r = integrate_real([](double) { return 1.0; }, 2.0, 2.0);
  CHECK(r.value == cplx(0.0, 0.0));
  CHECK(r.n_evals == 0);
}
