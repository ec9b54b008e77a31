// SPDX-License-Identifier: Apache-2.0

#include "udw/scenario.hpp"

#include <cmath>
#include <limits>

namespace udw {

ScenarioContext::ScenarioContext(const ScenarioConfig& cfg, int N,
                                 MasslessBasis basis)
    : cfg_(cfg), basis_(basis) {
  cfg_.validate();
  if (N < 1) throw DomainError("ScenarioContext: N must be >= 1");

  if (cfg_.a == 0.0) {
    // Both scenario kinds degenerate to a detector at rest at the centre of
    // a static cavity (validate() has already required the Midpoint anchor).
    is_static_ = true;
    family_ = ModeFamily::static_cavity(-0.5 * cfg_.L, cfg_.L, cfg_.m, N);
    traversal_ = std::numeric_limits<double>::infinity();
    return;
  }

  if (cfg_.kind == ScenarioKind::AcceleratingDetector) {
    const double x1 =
        (cfg_.anchor == Anchor::FullTraversal) ? 0.0 : -0.5 * cfg_.L;
    family_ = ModeFamily::static_cavity(x1, cfg_.L, cfg_.m, N);
    traversal_ = traversal_time_detector(cfg_.a, cfg_.L, cfg_.anchor);
    return;
  }

  path_ = static_detector_path(cfg_);
  traversal_ = traversal_time_cavity(cfg_.a, cfg_.L, cfg_.anchor);
  if (cfg_.m > 0.0) {
    family_ = ModeFamily::rindler_massive(path_.xi1, path_.xi2, cfg_.m, N);
  } else if (basis_ == MasslessBasis::Conformal) {
    const double zeta1 = std::log(cfg_.a * path_.xi1) / cfg_.a;
    const double lp = conformal_cavity_length(cfg_.a, cfg_.L, cfg_.anchor);
    family_ = ModeFamily::conformal_massless(zeta1, lp, N);
  } else {
    family_ = ModeFamily::rindler_massless_direct(path_.xi1, path_.xi2, N);
  }
}

double ScenarioContext::time_coord(double tau) const {
  if (is_static_) return tau;
  if (cfg_.kind == ScenarioKind::AcceleratingDetector)
    return std::sinh(cfg_.a * tau) / cfg_.a;
  // Static detector: proper time is lab time; the mode clock is Rindler eta
  // (or the conformal time eta/a when the conformal basis is in use).
  const double eta = path_.eta(tau);
  const bool conformal = cfg_.m == 0.0 && basis_ == MasslessBasis::Conformal;
  return conformal ? eta / cfg_.a : eta;
}

double ScenarioContext::mode_at(int n, double tau) const {
  if (is_static_) return family_.profile(n, 0.0);

  if (cfg_.kind == ScenarioKind::AcceleratingDetector) {
    const double x = accel_trajectory(cfg_.a, tau).x;
    if (x < family_.wall_lo() || x > family_.wall_hi()) return 0.0;
    return family_.profile(n, x);
  }

  if (std::abs(tau) >= path_.x_d) return 0.0;  // beyond the wedge chart
  const double xi = path_.xi(tau);
  if (xi < path_.xi1 || xi > path_.xi2) return 0.0;
  const bool conformal = cfg_.m == 0.0 && basis_ == MasslessBasis::Conformal;
  if (!conformal) return family_.profile(n, xi);
  return family_.profile(n, std::log(cfg_.a * xi) / cfg_.a);
}

double ScenarioContext::max_phase_rate(int n) const {
  const double w = family_.omega(n);
  if (is_static_) return w;  // T = tau and the detector does not move

  if (cfg_.kind == ScenarioKind::AcceleratingDetector) {
    // dT/dtau = cosh(a tau) peaks at the exit; the spatial phase advances
    // at k_n |dx/dtau| with k_n = n pi / L.
    const double span =
        (cfg_.anchor == Anchor::FullTraversal) ? cfg_.L : 0.5 * cfg_.L;
    const double ch = 1.0 + cfg_.a * span;
    const double sh = std::sqrt(ch * ch - 1.0);
    return w * ch + (n * M_PI / cfg_.L) * sh;
  }

  // |d eta / dt| <= x_d / xi1^2 and |d log xi / dt| <= t_max / xi1^2 inside
  // the cavity; the mode's local radial wavenumber (per log xi) is at most
  // its Rindler frequency.  The same bound serves the conformal basis,
  // whose frequencies and coordinates are rescaled by a and 1/a.
  const double geo =
      (path_.x_d + path_.t_max) / (path_.xi1 * path_.xi1);
  const bool conformal = cfg_.m == 0.0 && basis_ == MasslessBasis::Conformal;
  return conformal ? w * geo / cfg_.a : w * geo;
}

}  // namespace udw
