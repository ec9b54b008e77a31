// SPDX-License-Identifier: Apache-2.0
//
// First-order detector response.  With a sudden switching window [tau0,tau1]
// the excitation probability factorizes over modes,
//   P / lambda^2 = sum_n |M_n|^2 + (state excess),
//   M_n = int_{tau0}^{tau1} u_n(tau) e^{-i Omega tau} e^{-i w_n T(tau)} dtau,
// which is the production path here.  The same quantity is also available
// as the direct double integral of the pulled-back Wightman function
//   P / lambda^2 = int int e^{-i Omega (tau - tau')} W(tau, tau') dtau dtau'
// (slow; kept as an independent cross-check), and differentially as
//   Fdot(tau) = 2 Re int_{tau0}^{tau} e^{-i Omega (tau - tau')}
//                                     W(tau, tau') dtau'.

#ifndef UDW_RESPONSE_HPP
#define UDW_RESPONSE_HPP

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "udw/field_state.hpp"
#include "udw/quadrature.hpp"

namespace udw {

struct DetectorConfig {
  double omega = 3.141592653589793;  // energy gap
  double lambda = 1.0;  // coupling; results are reported as P/lambda^2
  // Interaction window in detector proper time.  NaN (default) means the
  // natural traversal [0, traversal_time]; a = 0 requires an explicit one.
  double tau0 = std::numeric_limits<double>::quiet_NaN();
  double tau1 = std::numeric_limits<double>::quiet_NaN();
};

/// Resolves the switching window.  Throws UsageError if only one bound is
/// set, if the window is empty, or if a = 0 and no window was given.
std::pair<double, double> interaction_window(const ScenarioContext& ctx,
                                             const DetectorConfig& det);

struct ResponseResult {
  double total = 0.0;        // P / lambda^2
  double vacuum_part = 0.0;  // sum_n |M_n|^2
  double excess_part = 0.0;  // state-dependent addition
  std::vector<double> per_mode;  // |M_n|^2
  double err_est = 0.0;          // propagated quadrature error
  std::vector<std::string> warnings;
};

/// Factorized per-mode evaluation (the production path).  The 1D mode
/// integrals run in best-effort mode -- high-order modes sit at the panel
/// roundoff floor where abs_tol is uncertifiable even though the value is
/// converged -- and accuracy is enforced on the assembled probability:
/// throws AccuracyError if the propagated estimate exceeds 1e-6 relative.
ResponseResult transition_probability(const ScenarioContext& ctx,
                                      const DetectorConfig& det,
                                      const FieldState& state,
                                      const QuadratureSpec& spec = {});

/// Direct 2D evaluation through the Wightman function; O(N) slower and
/// noisier than the factorized path, provided as an independent route.
double transition_probability_direct(const ScenarioContext& ctx,
                                     const DetectorConfig& det,
                                     const FieldState& state,
                                     const QuadratureSpec& spec = {});

/// Instantaneous transition rate Fdot(tau); exactly 0 at tau = tau0.
/// Throws DomainError if tau lies outside the interaction window.
/// err_est, when given, receives the propagated quadrature error.
double transition_rate(const ScenarioContext& ctx, const DetectorConfig& det,
                       const FieldState& state, double tau,
                       const QuadratureSpec& spec = {},
                       double* err_est = nullptr);

/// Fdot sampled on a uniform grid of n_points over the window.
std::vector<std::pair<double, double>> rate_curve(
    const ScenarioContext& ctx, const DetectorConfig& det,
    const FieldState& state, int n_points, const QuadratureSpec& spec = {});

struct ResonanceScan {
  std::vector<double> omegas;
  std::vector<double> p;      // P/lambda^2 at each gap
  std::vector<int> peaks;     // indices of pronounced local maxima
};

/// P as a function of the detector gap; a point is a pronounced peak when it
/// beats both neighbours and reaches peak_fraction of the global maximum.
ResonanceScan resonance_scan(const ScenarioContext& ctx,
                             const DetectorConfig& base,
                             const FieldState& state,
                             const std::vector<double>& omegas,
                             double peak_fraction = 0.05,
                             const QuadratureSpec& spec = {});

/// Signed P(second) - P(first) for two experiment configs sharing the same
/// detector and field state; feeding the same config twice gives exactly 0.
double scenario_difference(const ScenarioConfig& first,
                           const ScenarioConfig& second,
                           const DetectorConfig& det, const FieldState& state,
                           int N, MasslessBasis basis = MasslessBasis::Conformal,
                           const QuadratureSpec& spec = {});

/// Signed P_cavity - P_detector at a common (a, L, m, anchor, state); the
/// kind field of `base` is ignored.
double scenario_difference(const ScenarioConfig& base,
                           const DetectorConfig& det, const FieldState& state,
                           int N, MasslessBasis basis = MasslessBasis::Conformal,
                           const QuadratureSpec& spec = {});

}  // namespace udw

#endif  // UDW_RESPONSE_HPP
