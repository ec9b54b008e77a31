// SPDX-License-Identifier: Apache-2.0

#include "udw/response.hpp"

#include <cmath>
#include <complex>
#include <cstdio>

namespace udw {
namespace {

using cplx = std::complex<double>;

// M_n with phase sign s: int u_n e^{-i Omega tau} e^{-i s w_n T(tau)} dtau.
// s = +1 is the excitation moment; s = -1 appears in the Fock excess.
QuadResult mode_moment(const ScenarioContext& ctx, const DetectorConfig& det,
                       int n, double sign, double t0, double t1,
                       const QuadratureSpec& spec) {
  const double wn = ctx.omega(n);
  auto f = [&](double tau) -> cplx {
    const double u = ctx.mode_at(n, tau);
    if (u == 0.0) return {0.0, 0.0};
    const double phase = det.omega * tau + sign * wn * ctx.time_coord(tau);
    return u * std::exp(cplx(0.0, -phase));
  };
  const double rate = std::abs(det.omega) + ctx.max_phase_rate(n);
  return integrate_oscillatory(f, t0, t1, spec, rate);
}

double quad_err_sq(const QuadResult& r) {
  return 2.0 * std::abs(r.value) * r.err_est + r.err_est * r.err_est;
}

// High-order cavity modes push the requested tolerances below the roundoff
// floor of the oscillatory panels (the integral is converged, the estimator
// just cannot certify abs_tol).  The production path therefore integrates
// best-effort and enforces accuracy on the assembled result instead, where
// the meaningful scale -- the probability itself -- is known.
QuadratureSpec best_effort(QuadratureSpec spec) {
  spec.best_effort = true;
  return spec;
}

void check_response_accuracy(const ResponseResult& out,
                             const QuadratureSpec& spec) {
  // Errors below the caller's abs_tol are insignificant by definition;
  // that floor keeps exact cancellations (P ~ 0) from tripping the gate.
  if (out.err_est > spec.abs_tol &&
      out.err_est > 1e-6 * std::abs(out.total))
    throw AccuracyError(
        "transition_probability: estimated error exceeds 1e-6 relative",
        out.err_est);
}

}  // namespace

std::pair<double, double> interaction_window(const ScenarioContext& ctx,
                                             const DetectorConfig& det) {
  const bool has0 = std::isfinite(det.tau0);
  const bool has1 = std::isfinite(det.tau1);
  if (has0 != has1)
    throw UsageError(
        "interaction window: set both detector.tau0 and detector.tau1, or "
        "neither");
  if (has0) {
    if (!(det.tau1 > det.tau0))
      throw UsageError("interaction window: need tau1 > tau0");
    return {det.tau0, det.tau1};
  }
  if (ctx.is_static())
    throw UsageError(
        "a = 0 has no traversal to set the window; give detector.tau0/tau1");
  return {0.0, ctx.traversal_time()};
}

ResponseResult transition_probability(const ScenarioContext& ctx,
                                      const DetectorConfig& det,
                                      const FieldState& state,
                                      const QuadratureSpec& spec) {
  validate_state(state, ctx);
  const auto [t0, t1] = interaction_window(ctx, det);

  const QuadratureSpec mode_spec = best_effort(spec);
  ResponseResult out;
  out.per_mode.resize(static_cast<size_t>(ctx.n_modes()));
  for (int n = 1; n <= ctx.n_modes(); ++n) {
    const QuadResult r = mode_moment(ctx, det, n, +1.0, t0, t1, mode_spec);
    out.per_mode[n - 1] = std::norm(r.value);
    out.vacuum_part += out.per_mode[n - 1];
    out.err_est += quad_err_sq(r);
  }

  if (const auto* fock = std::get_if<FockState>(&state)) {
    const QuadResult r_down =
        mode_moment(ctx, det, fock->k, +1.0, t0, t1, mode_spec);
    const QuadResult r_up =
        mode_moment(ctx, det, fock->k, -1.0, t0, t1, mode_spec);
    out.excess_part =
        fock->n_k * (std::norm(r_down.value) + std::norm(r_up.value));
    out.err_est += fock->n_k * (quad_err_sq(r_down) + quad_err_sq(r_up));
  } else if (const auto* coh = std::get_if<CoherentState>(&state)) {
    auto f = [&](double tau) -> cplx {
      const cplx j = one_point_J(ctx, *coh, tau);
      if (j == cplx(0.0, 0.0)) return {0.0, 0.0};
      return 2.0 * j.real() * std::exp(cplx(0.0, -det.omega * tau));
    };
    const double rate = std::abs(det.omega) + ctx.max_phase_rate(coh->k);
    const QuadResult r = integrate_oscillatory(f, t0, t1, mode_spec, rate);
    out.excess_part = std::norm(r.value);
    out.err_est += quad_err_sq(r);
  }

  out.total = out.vacuum_part + out.excess_part;
  check_response_accuracy(out, spec);
  const double lp = det.lambda * det.lambda * out.total;
  if (lp > 0.1) {
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "lambda^2 P = %.3g: first-order perturbation theory is "
                  "unreliable here",
                  lp);
    out.warnings.emplace_back(buf);
  }
  return out;
}

double transition_probability_direct(const ScenarioContext& ctx,
                                     const DetectorConfig& det,
                                     const FieldState& state,
                                     const QuadratureSpec& spec) {
  validate_state(state, ctx);
  const auto [t0, t1] = interaction_window(ctx, det);
  const double rate =
      std::abs(det.omega) + ctx.max_phase_rate(ctx.n_modes());

  auto outer = [&](double tau) -> cplx {
    auto inner = [&](double taup) -> cplx {
      return std::exp(cplx(0.0, det.omega * taup)) *
             wightman(ctx, state, tau, taup);
    };
    const QuadResult g = integrate_oscillatory(inner, t0, t1, spec, rate);
    return std::exp(cplx(0.0, -det.omega * tau)) * g.value;
  };
  const QuadResult r = integrate_oscillatory(outer, t0, t1, spec, rate);
  return r.value.real();
}

double transition_rate(const ScenarioContext& ctx, const DetectorConfig& det,
                       const FieldState& state, double tau,
                       const QuadratureSpec& spec, double* err_est) {
  validate_state(state, ctx);
  if (err_est) *err_est = 0.0;
  const auto [t0, t1] = interaction_window(ctx, det);
  if (!(tau >= t0 && tau <= t1))
    throw DomainError("transition_rate: tau outside the interaction window");
  if (tau == t0) return 0.0;

  const double rate =
      std::abs(det.omega) + ctx.max_phase_rate(ctx.n_modes());
  auto f = [&](double taup) -> cplx {
    return std::exp(cplx(0.0, det.omega * taup)) *
           wightman(ctx, state, tau, taup);
  };
  const QuadResult r =
      integrate_oscillatory(f, t0, tau, best_effort(spec), rate);
  if (err_est) *err_est = 2.0 * r.err_est;
  return 2.0 * (std::exp(cplx(0.0, -det.omega * tau)) * r.value).real();
}

std::vector<std::pair<double, double>> rate_curve(const ScenarioContext& ctx,
                                                  const DetectorConfig& det,
                                                  const FieldState& state,
                                                  int n_points,
                                                  const QuadratureSpec& spec) {
  if (n_points < 2) throw DomainError("rate_curve: need at least 2 points");
  const auto [t0, t1] = interaction_window(ctx, det);
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double tau = t0 + (t1 - t0) * i / (n_points - 1);
    out.emplace_back(tau, transition_rate(ctx, det, state, tau, spec));
  }
  return out;
}

ResonanceScan resonance_scan(const ScenarioContext& ctx,
                             const DetectorConfig& base,
                             const FieldState& state,
                             const std::vector<double>& omegas,
                             double peak_fraction, const QuadratureSpec& spec) {
  if (omegas.empty()) throw UsageError("resonance_scan: empty gap grid");
  ResonanceScan scan;
  scan.omegas = omegas;
  scan.p.reserve(omegas.size());
  DetectorConfig det = base;
  for (double gap : omegas) {
    det.omega = gap;
    scan.p.push_back(transition_probability(ctx, det, state, spec).total);
  }
  double pmax = 0.0;
  for (double v : scan.p) pmax = std::max(pmax, v);
  for (size_t i = 1; i + 1 < scan.p.size(); ++i)
    if (scan.p[i] > scan.p[i - 1] && scan.p[i] > scan.p[i + 1] &&
        scan.p[i] >= peak_fraction * pmax)
      scan.peaks.push_back(static_cast<int>(i));
  return scan;
}

double scenario_difference(const ScenarioConfig& first,
                           const ScenarioConfig& second,
                           const DetectorConfig& det, const FieldState& state,
                           int N, MasslessBasis basis,
                           const QuadratureSpec& spec) {
  const double p1 =
      transition_probability(ScenarioContext(first, N, basis), det, state,
                             spec)
          .total;
  const double p2 =
      transition_probability(ScenarioContext(second, N, basis), det, state,
                             spec)
          .total;
  return p2 - p1;
}

double scenario_difference(const ScenarioConfig& base,
                           const DetectorConfig& det, const FieldState& state,
                           int N, MasslessBasis basis,
                           const QuadratureSpec& spec) {
  ScenarioConfig cavity = base;
  cavity.kind = ScenarioKind::AcceleratingCavity;
  ScenarioConfig detector = base;
  detector.kind = ScenarioKind::AcceleratingDetector;
  return scenario_difference(detector, cavity, det, state, N, basis, spec);
}

}  // namespace udw
