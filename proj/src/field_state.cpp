// SPDX-License-Identifier: Apache-2.0

#include "udw/field_state.hpp"

#include <cmath>

namespace udw {
namespace {

// Guard: the time coordinate may be undefined where the detector has left
// the cavity (e.g. past the wedge chart), but the profile is zero there, so
// every product below short-circuits on u == 0 before touching T.
struct ModeSample {
  double u = 0.0;
  double t_coord = 0.0;
  bool live = false;
};

ModeSample sample(const ScenarioContext& ctx, int n, double tau) {
  ModeSample s;
  s.u = ctx.mode_at(n, tau);
  if (s.u == 0.0) return s;
  s.t_coord = ctx.time_coord(tau);
  s.live = true;
  return s;
}

}  // namespace

void validate_state(const FieldState& state, const ScenarioContext& ctx) {
  if (const auto* fock = std::get_if<FockState>(&state)) {
    if (fock->k < 1 || fock->k > ctx.n_modes())
      throw DomainError("FockState: mode index outside the truncated basis");
    if (fock->n_k < 0) throw DomainError("FockState: n_k must be >= 0");
  } else if (const auto* coh = std::get_if<CoherentState>(&state)) {
    if (coh->k < 1 || coh->k > ctx.n_modes())
      throw DomainError(
          "CoherentState: mode index outside the truncated basis");
  }
}

std::complex<double> wightman_vacuum(const ScenarioContext& ctx, double tau,
                                     double taup) {
  const int n_modes = ctx.n_modes();
  // Collect profiles first: if either endpoint is outside the cavity the
  // whole sum vanishes and T need not exist.
  bool any = false;
  std::complex<double> w{0.0, 0.0};
  double t1 = 0.0, t2 = 0.0;
  for (int n = 1; n <= n_modes; ++n) {
    const double u1 = ctx.mode_at(n, tau);
    if (u1 == 0.0) continue;
    const double u2 = ctx.mode_at(n, taup);
    if (u2 == 0.0) continue;
    if (!any) {
      t1 = ctx.time_coord(tau);
      t2 = ctx.time_coord(taup);
      any = true;
    }
    const double wn = ctx.omega(n);
    w += u1 * u2 * std::exp(std::complex<double>(0.0, -wn * (t1 - t2)));
  }
  return w;
}

std::complex<double> wightman_fock_excess(const ScenarioContext& ctx,
                                          const FockState& state, double tau,
                                          double taup) {
  const ModeSample s1 = sample(ctx, state.k, tau);
  if (!s1.live) return {0.0, 0.0};
  const ModeSample s2 = sample(ctx, state.k, taup);
  if (!s2.live) return {0.0, 0.0};
  const double wk = ctx.omega(state.k);
  const double phase = wk * (s1.t_coord - s2.t_coord);
  // e^{-i phase} + e^{+i phase}
  return state.n_k * s1.u * s2.u * 2.0 * std::cos(phase);
}

std::complex<double> one_point_J(const ScenarioContext& ctx,
                                 const CoherentState& state, double tau) {
  const ModeSample s = sample(ctx, state.k, tau);
  if (!s.live) return {0.0, 0.0};
  const double wk = ctx.omega(state.k);
  return state.alpha * s.u *
         std::exp(std::complex<double>(0.0, -wk * s.t_coord));
}

double wightman_coherent_excess(const ScenarioContext& ctx,
                                const CoherentState& state, double tau,
                                double taup) {
  const std::complex<double> j1 = one_point_J(ctx, state, tau);
  if (j1 == std::complex<double>(0.0, 0.0)) return 0.0;
  const std::complex<double> j2 = one_point_J(ctx, state, taup);
  return 4.0 * j1.real() * j2.real();
}

std::complex<double> wightman(const ScenarioContext& ctx,
                              const FieldState& state, double tau,
                              double taup) {
  std::complex<double> w = wightman_vacuum(ctx, tau, taup);
  if (const auto* fock = std::get_if<FockState>(&state))
    w += wightman_fock_excess(ctx, *fock, tau, taup);
  else if (const auto* coh = std::get_if<CoherentState>(&state))
    w += wightman_coherent_excess(ctx, *coh, tau, taup);
  return w;
}

}  // namespace udw
