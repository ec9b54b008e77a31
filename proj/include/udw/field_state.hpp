// SPDX-License-Identifier: Apache-2.0
//
// Field states and their pulled-back Wightman functions.  Everything is
// evaluated along the detector worldline, so two-point objects take proper
// times and use the scenario's mode data:
//   W_vac(tau, tau')  = sum_n u_n(tau) u_n(tau') e^{-i w_n (T - T')}
//   Fock |n_k> excess = n_k u_k u_k' [e^{-i w_k (T-T')} + e^{+i w_k (T-T')}]
//   coherent |alpha_k> excess = 4 Re J(tau) Re J(tau'),
//                              J(tau) = alpha u_k(tau) e^{-i w_k T(tau)}
// with u_n(tau) the mode profile along the path (zero outside the cavity).

#ifndef UDW_FIELD_STATE_HPP
#define UDW_FIELD_STATE_HPP

#include <complex>
#include <variant>

#include "udw/scenario.hpp"

namespace udw {

struct VacuumState {};

struct FockState {
  int k = 1;    // excited mode index (1-based)
  int n_k = 1;  // occupation number
};

struct CoherentState {
  int k = 1;
  std::complex<double> alpha{0.0, 0.0};
};

using FieldState = std::variant<VacuumState, FockState, CoherentState>;

/// Throws DomainError if the state references a mode outside 1..N or has a
/// negative occupation number.
void validate_state(const FieldState& state, const ScenarioContext& ctx);

std::complex<double> wightman_vacuum(const ScenarioContext& ctx, double tau,
                                     double taup);
std::complex<double> wightman_fock_excess(const ScenarioContext& ctx,
                                          const FockState& state, double tau,
                                          double taup);
std::complex<double> one_point_J(const ScenarioContext& ctx,
                                 const CoherentState& state, double tau);
double wightman_coherent_excess(const ScenarioContext& ctx,
                                const CoherentState& state, double tau,
                                double taup);

/// Vacuum part plus the state's excess.
std::complex<double> wightman(const ScenarioContext& ctx,
                              const FieldState& state, double tau,
                              double taup);

}  // namespace udw

#endif  // UDW_FIELD_STATE_HPP
