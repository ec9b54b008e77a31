// SPDX-License-Identifier: Apache-2.0

#include "udw/kinematics.hpp"

#include <cmath>
#include <sstream>

namespace udw {

void ScenarioConfig::validate() const {
  if (a < 0.0) throw DomainError("ScenarioConfig: acceleration a must be >= 0");
  if (!(L > 0.0)) throw DomainError("ScenarioConfig: cavity length L must be > 0");
  if (m < 0.0) throw DomainError("ScenarioConfig: field mass m must be >= 0");
  if (a == 0.0 && anchor == Anchor::FullTraversal)
    throw UsageError(
        "ScenarioConfig: a = 0 requires the Midpoint anchor (a detector "
        "resting at the wall sits on a field node and never responds)");
  if (kind == ScenarioKind::AcceleratingCavity && anchor == Anchor::Midpoint &&
      a * L >= 2.0) {
    std::ostringstream os;
    os << "ScenarioConfig: rigidity bound violated: midpoint cavity needs "
          "a*L < 2 (rear wall would cross the Rindler horizon), got a*L = "
       << a * L;
    throw RigidityError(os.str());
  }
}

const char* to_string(ScenarioKind k) {
  return k == ScenarioKind::AcceleratingDetector ? "AcceleratingDetector"
                                                 : "AcceleratingCavity";
}

const char* to_string(Anchor anchor) {
  return anchor == Anchor::FullTraversal ? "FullTraversal" : "Midpoint";
}

ScenarioKind scenario_kind_from_string(const std::string& s) {
  if (s == "AcceleratingDetector") return ScenarioKind::AcceleratingDetector;
  if (s == "AcceleratingCavity") return ScenarioKind::AcceleratingCavity;
  throw UsageError("unknown scenario.kind '" + s +
                   "' (expected AcceleratingDetector or AcceleratingCavity)");
}

Anchor anchor_from_string(const std::string& s) {
  if (s == "FullTraversal") return Anchor::FullTraversal;
  if (s == "Midpoint") return Anchor::Midpoint;
  throw UsageError("unknown scenario.anchor '" + s +
                   "' (expected FullTraversal or Midpoint)");
}

LabPoint accel_trajectory(double a, double tau) {
  if (!(a > 0.0)) throw DomainError("accel_trajectory: a must be > 0");
  // (x + 1/a)^2 - t^2 = 1/a^2. cosh - 1 written as 2 sinh^2(a tau / 2) so x
  // stays accurate deep in the a*tau -> 0 regime.
  const double sh = std::sinh(0.5 * a * tau);
  return {std::sinh(a * tau) / a, 2.0 * sh * sh / a};
}

double traversal_time_detector(double a, double L, Anchor anchor) {
  if (!(a > 0.0)) throw DomainError("traversal_time_detector: a must be > 0");
  if (!(L > 0.0)) throw DomainError("traversal_time_detector: L must be > 0");
  const double span = anchor == Anchor::Midpoint ? 0.5 * L : L;
  return std::acosh(1.0 + a * span) / a;
}

double conformal_cavity_length(double a, double L, Anchor anchor) {
  if (!(a > 0.0)) throw DomainError("conformal_cavity_length: a must be > 0");
  if (!(L > 0.0)) throw DomainError("conformal_cavity_length: L must be > 0");
  if (anchor == Anchor::FullTraversal) return std::log1p(a * L) / a;
  if (a * L >= 2.0)
    throw RigidityError(
        "conformal_cavity_length: midpoint cavity needs a*L < 2");
  // walls at xi = 1/a -+ L/2, so L' = log(xi2/xi1)/a
  return std::log((2.0 + a * L) / (2.0 - a * L)) / a;
}

double traversal_time_cavity(double a, double L, Anchor anchor) {
  if (!(a > 0.0)) throw DomainError("traversal_time_cavity: a must be > 0");
  if (!(L > 0.0)) throw DomainError("traversal_time_cavity: L must be > 0");
  if (anchor == Anchor::FullTraversal) return std::sqrt(2.0 * L / a + L * L);
  if (a * L >= 2.0)
    throw RigidityError("traversal_time_cavity: midpoint cavity needs a*L < 2");
  return std::sqrt(L / a - 0.25 * L * L);
}

RindlerPoint lab_to_rindler(LabPoint p) {
  if (!(p.x > std::abs(p.t)))
    throw DomainError("lab_to_rindler: point outside the right Rindler wedge");
  const double xi = std::sqrt((p.x - p.t) * (p.x + p.t));
  return {std::atanh(p.t / p.x), xi};
}

LabPoint rindler_to_lab(RindlerPoint p) {
  if (!(p.xi > 0.0)) throw DomainError("rindler_to_lab: xi must be > 0");
  return {p.xi * std::sinh(p.eta), p.xi * std::cosh(p.eta)};
}

ConformalRindlerPoint lab_to_conformal(double a, LabPoint p) {
  if (!(a > 0.0)) throw DomainError("lab_to_conformal: a must be > 0");
  const RindlerPoint r = lab_to_rindler(p);
  return {r.eta / a, std::log(a * r.xi) / a};
}

LabPoint conformal_to_lab(double a, ConformalRindlerPoint p) {
  if (!(a > 0.0)) throw DomainError("conformal_to_lab: a must be > 0");
  return rindler_to_lab({a * p.varsigma, std::exp(a * p.zeta) / a});
}

double Trajectory::xi(double t) const {
  const double arg = (x_d - t) * (x_d + t);
  if (!(arg > 0.0))
    throw DomainError("Trajectory::xi: |t| >= x_d leaves the right wedge");
  return std::sqrt(arg);
}

double Trajectory::eta(double t) const {
  if (!(std::abs(t) < x_d))
    throw DomainError("Trajectory::eta: |t| >= x_d leaves the right wedge");
  return std::atanh(t / x_d);
}

Trajectory static_detector_path(const ScenarioConfig& config) {
  config.validate();
  if (config.kind != ScenarioKind::AcceleratingCavity)
    throw UsageError(
        "static_detector_path: config must describe an AcceleratingCavity");
  if (!(config.a > 0.0))
    throw UsageError("static_detector_path: a = 0 has no Rindler chart; use "
                     "the static response path");

  Trajectory tr;
  if (config.anchor == Anchor::FullTraversal) {
    tr.xi1 = 1.0 / config.a;
    tr.xi2 = 1.0 / config.a + config.L;
    tr.x_d = tr.xi2;  // detector starts level with the front wall
  } else {
    tr.xi1 = 1.0 / config.a - 0.5 * config.L;
    tr.xi2 = 1.0 / config.a + 0.5 * config.L;
    tr.x_d = 1.0 / config.a;  // cavity centre
  }
  tr.t_max = traversal_time_cavity(config.a, config.L, config.anchor);
  return tr;
}

double proper_accel_profile(double a1, double x, double x1) {
  if (!(a1 > 0.0)) throw DomainError("proper_accel_profile: a1 must be > 0");
  if (x < x1)
    throw DomainError("proper_accel_profile: x must lie at or ahead of the "
                      "rear wall x1");
  const double denom = 1.0 + a1 * (x - x1);
  if (!(denom > 0.0))
    throw DomainError("proper_accel_profile: point beyond the Rindler horizon");
  return a1 / denom;
}

}  // namespace udw
