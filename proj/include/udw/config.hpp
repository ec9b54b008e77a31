// SPDX-License-Identifier: Apache-2.0
//
// Flat key=value run configuration.
//
// A config file is plain text: one `key = value` per line, `#` starts a
// comment, blank lines are ignored.  Keys are dotted (scenario.kind,
// detector.omega, ...); unknown or duplicate keys are rejected with the
// file name and line number so a typo never silently falls back to a
// default.  The same format is echoed into every CSV header and manifest,
// and parse_config_text(config_echo(cfg)) reproduces cfg exactly -- that
// round trip is what makes runs re-executable from their own outputs.

#ifndef UDW_CONFIG_HPP
#define UDW_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "udw/field_state.hpp"
#include "udw/quadrature.hpp"
#include "udw/response.hpp"
#include "udw/scenario.hpp"

namespace udw {

enum class SweepAxis { A, Omega, Mass, Tau, NModes };

enum class Observable { P, DPScenarios, Rate, PerMode };

struct SweepRequest {
  SweepAxis axis = SweepAxis::A;
  std::vector<double> grid;            // strictly increasing, nonempty
  std::vector<Observable> outputs{Observable::P};
};

struct RunConfig {
  ScenarioConfig scenario;
  DetectorConfig detector;
  FieldState state = VacuumState{};
  int n_modes = 15;
  MasslessBasis basis = MasslessBasis::Conformal;
  QuadratureSpec quad;
  std::optional<SweepRequest> sweep;
};

/// Parse a config from text.  `origin` is used in error messages
/// ("spec.cfg:7: unknown key ...").  Throws UsageError on any problem.
RunConfig parse_config_text(const std::string& text, const std::string& origin);

/// Parse a config file from disk.  Throws UsageError (also for I/O failure).
RunConfig parse_config_file(const std::string& path);

/// Canonical key=value rendering, one key per line, fixed order, 17
/// significant digits.  Complete: parse_config_text() of the result gives
/// back an identical RunConfig.
std::string config_echo(const RunConfig& cfg);

/// Grid grammar: "v1,v2,..." explicit list, "lin:lo:hi:n" n equally spaced
/// points, "log:lo:hi:n" n log-spaced points (lo, hi > 0).  Result must be
/// strictly increasing.  Throws UsageError.
std::vector<double> parse_grid(const std::string& text);

const char* axis_name(SweepAxis axis);
const char* observable_name(Observable obs);

/// Build the scenario context a config describes.
ScenarioContext make_context(const RunConfig& cfg);

}  // namespace udw

#endif  // UDW_CONFIG_HPP
