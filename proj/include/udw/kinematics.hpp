// SPDX-License-Identifier: Apache-2.0
//
// Coordinate charts and worldlines for the two cavity experiments.
//
// Lab frame (t, x); standard Rindler chart t = xi sinh(eta), x = xi cosh(eta)
// on the right wedge x > |t|; conformal (Lass/radar) Rindler chart
// t = (e^{a zeta}/a) sinh(a varsigma), x = (e^{a zeta}/a) cosh(a varsigma).
// Natural units c = hbar = 1 throughout.

#ifndef UDW_KINEMATICS_HPP
#define UDW_KINEMATICS_HPP

#include <string>

#include "udw/errors.hpp"

namespace udw {

struct LabPoint {
  double t;
  double x;
};

struct RindlerPoint {
  double eta;  // boost parameter, dimensionless
  double xi;   // > 0, right wedge only
};

struct ConformalRindlerPoint {
  double varsigma;  // conformal time
  double zeta;      // conformal position; xi = e^{a zeta}/a
};

enum class ScenarioKind { AcceleratingDetector, AcceleratingCavity };

/// Where the detector sits relative to the cavity at t = 0.
/// FullTraversal: detector starts at the rear wall and crosses the whole
/// cavity. Midpoint: detector starts at (AcceleratingDetector) or stays at
/// (AcceleratingCavity) the cavity centre.
enum class Anchor { FullTraversal, Midpoint };

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::AcceleratingDetector;
  double a = 1.0;  // proper acceleration parameter, >= 0
  double L = 1.0;  // cavity proper length in the lab frame at t = 0
  double m = 0.0;  // field mass
  Anchor anchor = Anchor::FullTraversal;

  /// Throws DomainError / RigidityError / UsageError on invalid combinations:
  /// a = 0 is allowed only with Midpoint anchor (a FullTraversal detector at
  /// zero acceleration merges with the Dirichlet wall and never excites);
  /// AcceleratingCavity + Midpoint requires a*L < 2.
  void validate() const;
};

const char* to_string(ScenarioKind k);
const char* to_string(Anchor anchor);
ScenarioKind scenario_kind_from_string(const std::string& s);
Anchor anchor_from_string(const std::string& s);

/// Uniformly accelerated worldline through the lab origin:
/// x(tau) = ((1/a) sinh(a tau), (1/a)(cosh(a tau) - 1)).
LabPoint accel_trajectory(double a, double tau);

/// Proper time for the accelerating detector to cross the static cavity:
/// arccosh(1 + aL)/a, with L -> L/2 for the midpoint start.
double traversal_time_detector(double a, double L, Anchor anchor);

/// Proper length of the accelerating cavity in the conformal chart.
/// FullTraversal: L' = log(1 + aL)/a with rear wall at zeta_1 = 0.
/// Midpoint: L' = log((2+aL)/(2-aL))/a (walls at xi = 1/a -+ L/2).
double conformal_cavity_length(double a, double L, Anchor anchor);

/// Lab time at which the static detector exits the accelerating cavity:
/// FullTraversal sqrt(2L/a + L^2); Midpoint sqrt(L/a - L^2/4).
double traversal_time_cavity(double a, double L, Anchor anchor);

RindlerPoint lab_to_rindler(LabPoint p);
LabPoint rindler_to_lab(RindlerPoint p);
ConformalRindlerPoint lab_to_conformal(double a, LabPoint p);
LabPoint conformal_to_lab(double a, ConformalRindlerPoint p);

/// Static-detector worldline inside the accelerating cavity, parameterized
/// by lab time (= proper time for this inertial detector).
struct Trajectory {
  double x_d = 0.0;    // fixed lab position of the detector
  double xi1 = 0.0;    // rear cavity wall (Rindler radius)
  double xi2 = 0.0;    // front cavity wall
  double t_max = 0.0;  // detector meets the rear wall here

  LabPoint lab(double t) const { return {t, x_d}; }
  /// Rindler radius along the path, xi(t) = sqrt(x_d^2 - t^2).
  double xi(double t) const;
  /// Boost parameter along the path, eta(t) = atanh(t / x_d).
  double eta(double t) const;
};

/// Builds the static-detector path for an AcceleratingCavity config.
/// FullTraversal: detector at x_d = 1/a + L (front wall), rear wall at 1/a.
/// Midpoint: detector at x_d = 1/a (cavity centre), walls at 1/a -+ L/2.
Trajectory static_detector_path(const ScenarioConfig& config);

/// Born-rigid acceleration profile across the cavity: a1 / (1 + a1 (x - x1))
/// where a1 is the rear-wall proper acceleration.
double proper_accel_profile(double a1, double x, double x1);

}  // namespace udw

#endif  // UDW_KINEMATICS_HPP
