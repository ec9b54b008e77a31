// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps and convergence reports.
//
// A sweep evaluates the configured observables at every grid point of one
// axis.  Points are independent, so they are dispatched to a small worker
// pool; results are collected into grid order afterwards, which keeps the
// CSV body bitwise identical for any thread count.  A point that throws is
// recorded as a failure and the remaining points still run -- partial
// results are better than none on a long sweep, and the manifest flags
// what is missing.

#ifndef UDW_SWEEP_HPP
#define UDW_SWEEP_HPP

#include <string>
#include <vector>

#include "udw/config.hpp"

namespace udw {

struct SweepOutcome {
  std::vector<std::string> columns;        // axis, observables..., err_est, N_used
  std::vector<std::vector<double>> rows;   // completed rows in grid order
  std::vector<std::string> warnings;       // tagged "axis = value: message"
  std::vector<std::string> failures;       // tagged per failed grid point
};

/// Run the sweep described by cfg.sweep (UsageError if absent).
SweepOutcome run_sweep(const RunConfig& cfg, int threads = 1);

/// Render a sweep outcome as a CSV file: version + notes + config echo +
/// column header + rows.
std::string sweep_csv(const RunConfig& cfg, const SweepOutcome& outcome,
                      const std::vector<std::string>& notes = {});

struct ConvergenceRow {
  int n_modes = 0;
  double p = 0.0;
  double err_est = 0.0;
  double delta_rel = 0.0;  // |P_i - P_{i-1}| / |P_i|; NaN on the first row
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  int recommended_n = -1;  // first N whose delta_rel < 1e-3; -1 if none
  bool excess_exact = false;  // excited-state excess has no mode-sum truncation
};

/// P as a function of the mode cutoff, over an ascending N list.
ConvergenceReport convergence_report(const RunConfig& cfg,
                                     const std::vector<int>& n_list,
                                     int threads = 1);

std::string convergence_csv(const RunConfig& cfg,
                            const ConvergenceReport& report);

/// Human-readable table for the terminal.
std::string convergence_table(const ConvergenceReport& report);

}  // namespace udw

#endif  // UDW_SWEEP_HPP
