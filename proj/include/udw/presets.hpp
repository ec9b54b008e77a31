// SPDX-License-Identifier: Apache-2.0
//
// Named, self-contained runs that regenerate the library's reference
// figures as CSV data.  Each preset fixes the physics parameters and a
// documented grid choice, runs the corresponding sweeps, and hands back
// the files plus any per-point failures; the CLI writes them as a bundle
// with a manifest.  Grids are choices, not measurements -- where a figure
// only fixes the physics, the axis range is picked to show the same
// features and is recorded in the CSV notes.

#ifndef UDW_PRESETS_HPP
#define UDW_PRESETS_HPP

#include <string>
#include <vector>

#include "udw/csv.hpp"

namespace udw {

struct PresetRun {
  std::vector<OutputFile> files;
  std::vector<std::string> failures;  // nonempty -> partial results
};

/// Catalog order is the documentation order.
std::vector<std::string> preset_names();

/// One-line description; UsageError for unknown names.
std::string preset_description(const std::string& name);

/// Execute a preset; UsageError for unknown names.  Numerical failures at
/// individual grid points are reported in .failures, not thrown.
PresetRun run_preset(const std::string& name, int threads = 1);

}  // namespace udw

#endif  // UDW_PRESETS_HPP
