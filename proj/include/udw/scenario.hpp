// SPDX-License-Identifier: Apache-2.0
//
// ScenarioContext bundles what the response integrals need from a configured
// experiment: the mode family, the detector worldline, and the phase
// bookkeeping.  Along the detector path every field mode contributes
//   u_n(path(tau)) e^{-i w_n T(tau)}
// where T is the time coordinate conjugate to the family's frequencies:
//   AcceleratingDetector  T(tau) = sinh(a tau)/a          (lab time)
//   AcceleratingCavity    T(t)   = atanh(t/x_d)           (Rindler eta)
//                         or eta/a when the conformal basis is used
//   a = 0 (either kind)   T(tau) = tau
// The detector's proper time parameterizes everything; for the static
// detector in the accelerating cavity that is just lab time t.

#ifndef UDW_SCENARIO_HPP
#define UDW_SCENARIO_HPP

#include "udw/kinematics.hpp"
#include "udw/modes.hpp"

namespace udw {

/// Mode basis for the massless accelerating cavity: the conformal chart and
/// the direct Rindler chart carry the same physical modes; both are kept so
/// one can validate against the other.  Ignored when m > 0 or for the
/// accelerating-detector scenario.
enum class MasslessBasis { Conformal, DirectRindler };

class ScenarioContext {
 public:
  ScenarioContext(const ScenarioConfig& cfg, int N,
                  MasslessBasis basis = MasslessBasis::Conformal);

  const ScenarioConfig& config() const { return cfg_; }
  const ModeFamily& family() const { return family_; }
  int n_modes() const { return family_.size(); }
  bool is_static() const { return is_static_; }

  /// Proper time from the start anchor until the detector meets a wall;
  /// +inf for the static (a = 0) case, where the interaction window must be
  /// chosen explicitly.
  double traversal_time() const { return traversal_; }

  double omega(int n) const { return family_.omega(n); }

  /// Mode phase time T(tau); the n-th mode evolves as e^{-i omega(n) T}.
  double time_coord(double tau) const;

  /// Mode function along the detector path; 0 once the detector has left
  /// the cavity (sudden support cutoff at the walls).
  double mode_at(int n, double tau) const;

  /// Upper bound on |d/dtau [omega(n) T(tau)]| plus the spatial oscillation
  /// rate of mode n along the path, valid wherever mode_at is nonzero.
  /// Feed this (plus the detector gap) to the quadrature guard.
  double max_phase_rate(int n) const;

 private:
  ScenarioConfig cfg_;
  MasslessBasis basis_;
  ModeFamily family_;
  Trajectory path_;  // AcceleratingCavity only
  double traversal_ = 0.0;
  bool is_static_ = false;
};

}  // namespace udw

#endif  // UDW_SCENARIO_HPP
