// SPDX-License-Identifier: Apache-2.0

#include "udw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

#include "udw/csv.hpp"
#include "udw/response.hpp"

namespace udw {

namespace {

bool wants(const SweepRequest& req, Observable obs) {
  return std::count(req.outputs.begin(), req.outputs.end(), obs) > 0;
}

RunConfig at_grid_point(const RunConfig& base, SweepAxis axis, double v) {
  RunConfig local = base;
  switch (axis) {
    case SweepAxis::A:
      local.scenario.a = v;
      break;
    case SweepAxis::Omega:
      local.detector.omega = v;
      break;
    case SweepAxis::Mass:
      local.scenario.m = v;
      break;
    case SweepAxis::Tau:
      // Window [tau0 (default 0), v]; the rate observable reads Fdot at the
      // window end, which only depends on history up to v anyway.
      if (!std::isfinite(local.detector.tau0)) local.detector.tau0 = 0.0;
      local.detector.tau1 = v;
      break;
    case SweepAxis::NModes:
      local.n_modes = static_cast<int>(v);
      break;
  }
  return local;
}

/// Contexts for one grid point; shared across rows when the geometry does
/// not vary along the axis (Omega and tau sweeps).
struct PointContexts {
  const ScenarioContext* main = nullptr;      // cfg.scenario.kind as given
  const ScenarioContext* detector = nullptr;  // dP_scenarios pair
  const ScenarioContext* cavity = nullptr;
  std::vector<ScenarioContext> owned;
};

void run_point(const RunConfig& cfg, const SweepRequest& req, double v,
               const PointContexts& ctxs, std::vector<double>* row,
               std::vector<std::string>* warnings) {
  row->push_back(v);

  std::optional<ResponseResult> main_r;
  const auto main_result = [&]() -> const ResponseResult& {
    if (!main_r)
      main_r = transition_probability(*ctxs.main, cfg.detector, cfg.state,
                                      cfg.quad);
    return *main_r;
  };

  double err = 0.0;
  for (Observable obs : req.outputs) {
    switch (obs) {
      case Observable::P:
        row->push_back(main_result().total);
        break;
      case Observable::DPScenarios: {
        const ResponseResult rd = transition_probability(
            *ctxs.detector, cfg.detector, cfg.state, cfg.quad);
        const ResponseResult rc = transition_probability(
            *ctxs.cavity, cfg.detector, cfg.state, cfg.quad);
        row->push_back(rd.total);
        row->push_back(rc.total);
        row->push_back(rc.total - rd.total);
        err += rd.err_est + rc.err_est;
        for (const auto& w : rd.warnings) warnings->push_back(w);
        for (const auto& w : rc.warnings) warnings->push_back(w);
        break;
      }
      case Observable::Rate: {
        double rate_err = 0.0;
        row->push_back(transition_rate(*ctxs.main, cfg.detector, cfg.state, v,
                                       cfg.quad, &rate_err));
        err += rate_err;
        break;
      }
      case Observable::PerMode:
        for (double pm : main_result().per_mode) row->push_back(pm);
        break;
    }
  }
  if (main_r) {
    err += main_r->err_est;
    for (const auto& w : main_r->warnings) warnings->push_back(w);
  }
  row->push_back(err);
  row->push_back(static_cast<double>(cfg.n_modes));
}

}  // namespace

SweepOutcome run_sweep(const RunConfig& base, int threads) {
  if (!base.sweep)
    throw UsageError("run_sweep: config has no sweep.axis/sweep.grid");
  const SweepRequest& req = *base.sweep;
  const size_t n = req.grid.size();

  SweepOutcome out;
  out.columns.push_back(axis_name(req.axis));
  for (Observable obs : req.outputs) {
    switch (obs) {
      case Observable::P:
        out.columns.push_back("P");
        break;
      case Observable::DPScenarios:
        out.columns.push_back("P_detector");
        out.columns.push_back("P_cavity");
        out.columns.push_back("dP");
        break;
      case Observable::Rate:
        out.columns.push_back("Fdot");
        break;
      case Observable::PerMode:
        for (int k = 1; k <= base.n_modes; ++k)
          out.columns.push_back("P_" + std::to_string(k));
        break;
    }
  }
  out.columns.push_back("err_est");
  out.columns.push_back("N_used");

  const bool need_main = wants(req, Observable::P) ||
                         wants(req, Observable::Rate) ||
                         wants(req, Observable::PerMode);
  const bool need_pair = wants(req, Observable::DPScenarios);
  const bool geometry_fixed =
      req.axis == SweepAxis::Omega || req.axis == SweepAxis::Tau;

  // Geometry shared by every row: build the contexts once up front.
  PointContexts shared;
  shared.owned.reserve(3);  // pointers below must survive emplace_back
  if (geometry_fixed) {
    if (need_main) {
      shared.owned.emplace_back(base.scenario, base.n_modes, base.basis);
      shared.main = &shared.owned.back();
    }
    if (need_pair) {
      ScenarioConfig sc = base.scenario;
      sc.kind = ScenarioKind::AcceleratingDetector;
      shared.owned.emplace_back(sc, base.n_modes, base.basis);
      sc.kind = ScenarioKind::AcceleratingCavity;
      shared.owned.emplace_back(sc, base.n_modes, base.basis);
      shared.detector = &shared.owned[shared.owned.size() - 2];
      shared.cavity = &shared.owned[shared.owned.size() - 1];
    }
  }

  std::vector<std::vector<double>> rows(n);
  std::vector<std::vector<std::string>> row_warnings(n);
  std::vector<std::string> row_failures(n);

  const auto worker = [&](size_t i) {
    const double v = req.grid[i];
    try {
      const RunConfig cfg = at_grid_point(base, req.axis, v);
      PointContexts local;
      local.owned.reserve(3);
      const PointContexts* ctxs = &shared;
      if (!geometry_fixed) {
        if (need_main) {
          local.owned.emplace_back(cfg.scenario, cfg.n_modes, cfg.basis);
          local.main = &local.owned.back();
        }
        if (need_pair) {
          ScenarioConfig sc = cfg.scenario;
          sc.kind = ScenarioKind::AcceleratingDetector;
          local.owned.emplace_back(sc, cfg.n_modes, cfg.basis);
          sc.kind = ScenarioKind::AcceleratingCavity;
          local.owned.emplace_back(sc, cfg.n_modes, cfg.basis);
          local.detector = &local.owned[local.owned.size() - 2];
          local.cavity = &local.owned[local.owned.size() - 1];
        }
        ctxs = &local;
      }
      run_point(cfg, req, v, *ctxs, &rows[i], &row_warnings[i]);
    } catch (const std::exception& e) {
      rows[i].clear();
      row_failures[i] = std::string(axis_name(req.axis)) + " = " +
                        format_double(v) + ": " + e.what();
    }
  };

  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  const int k = std::max(1, std::min({threads, hw > 0 ? hw : 1,
                                      static_cast<int>(n)}));
  if (k == 1) {
    for (size_t i = 0; i < n; ++i) worker(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
          worker(i);
      });
    for (auto& t : pool) t.join();
  }

  for (size_t i = 0; i < n; ++i) {
    if (!row_failures[i].empty()) {
      out.failures.push_back(row_failures[i]);
      continue;
    }
    out.rows.push_back(std::move(rows[i]));
    const std::string tag = std::string(axis_name(req.axis)) + " = " +
                            format_double(req.grid[i]) + ": ";
    for (const auto& w : row_warnings[i]) {
      const std::string tagged = tag + w;
      if (std::count(out.warnings.begin(), out.warnings.end(), tagged) == 0)
        out.warnings.push_back(tagged);
    }
  }
  return out;
}

std::string sweep_csv(const RunConfig& cfg, const SweepOutcome& outcome,
                      const std::vector<std::string>& notes) {
  CsvWriter csv(outcome.columns);
  for (const auto& line : notes) csv.note(line);
  csv.echo_config(config_echo(cfg));
  for (const auto& row : outcome.rows) csv.add_row(row);
  return csv.str();
}

ConvergenceReport convergence_report(const RunConfig& base,
                                     const std::vector<int>& n_list,
                                     int threads) {
  if (n_list.empty()) throw UsageError("convergence_report: empty N list");
  for (size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 1)
      throw UsageError("convergence_report: N values must be >= 1");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw UsageError("convergence_report: N list must be ascending");
  }

  // Reuse the sweep machinery: axis N, output P.
  RunConfig cfg = base;
  SweepRequest req;
  req.axis = SweepAxis::NModes;
  for (int nv : n_list) req.grid.push_back(nv);
  req.outputs = {Observable::P};
  cfg.sweep = req;

  const SweepOutcome outcome = run_sweep(cfg, threads);
  if (!outcome.failures.empty())
    throw Error("convergence_report: " + outcome.failures.front());

  ConvergenceReport report;
  report.excess_exact = !std::holds_alternative<VacuumState>(base.state);
  for (const auto& row : outcome.rows) {
    ConvergenceRow r;
    r.n_modes = static_cast<int>(row[0]);
    r.p = row[1];
    r.err_est = row[2];
    r.delta_rel = std::numeric_limits<double>::quiet_NaN();
    if (!report.rows.empty() && r.p != 0.0)
      r.delta_rel = std::abs(r.p - report.rows.back().p) / std::abs(r.p);
    if (report.rows.size() >= 1 && std::isfinite(r.delta_rel) &&
        r.delta_rel < 1e-3 && report.recommended_n < 0)
      report.recommended_n = r.n_modes;
    report.rows.push_back(r);
  }
  return report;
}

std::string convergence_csv(const RunConfig& cfg,
                            const ConvergenceReport& report) {
  CsvWriter csv({"N", "P", "err_est", "delta_rel"});
  csv.echo_config(config_echo(cfg));
  for (const auto& r : report.rows)
    csv.add_row({static_cast<double>(r.n_modes), r.p, r.err_est, r.delta_rel});
  return csv.str();
}

std::string convergence_table(const ConvergenceReport& report) {
  std::ostringstream out;
  char line[96];
  std::snprintf(line, sizeof(line), "%6s  %22s  %12s\n", "N", "P", "delta_rel");
  out << line;
  for (const auto& r : report.rows) {
    if (std::isnan(r.delta_rel))
      std::snprintf(line, sizeof(line), "%6d  %22.15g  %12s\n", r.n_modes, r.p,
                    "--");
    else
      std::snprintf(line, sizeof(line), "%6d  %22.15g  %12.3g\n", r.n_modes,
                    r.p, r.delta_rel);
    out << line;
  }
  if (report.recommended_n > 0)
    out << "recommended N: " << report.recommended_n
        << " (first successive relative delta < 1e-3)\n";
  else
    out << "recommended N: none in the list reached a successive relative "
           "delta < 1e-3\n";
  if (report.excess_exact)
    out << "note: the excited-state excess is a closed form with no mode-sum "
           "truncation; only the vacuum part converges with N\n";
  return out.str();
}

}  // namespace udw
