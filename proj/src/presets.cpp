// SPDX-License-Identifier: Apache-2.0

#include "udw/presets.hpp"

#include <cmath>
#include <utility>

#include "udw/response.hpp"
#include "udw/sweep.hpp"

namespace udw {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

const char* const kNames[] = {
    "plotdiff1",          "plotdiff2",          "plotdiff3",
    "masslesslimit",      "plotexcited1",       "plotexcited2",
    "plotsinglecoherent1", "plotsinglecoherent2", "plotresonance1",
    "plotrate1",          "plotrate2",          "plotrate3",
    "cavconvergence1",
};

/// Short value tag for file names ("0.1", "1e-20"), in contrast to the
/// 17-digit form used inside the data.
std::string tag_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

RunConfig vacuum_run(double a, double m, double omega, int n_modes = 15) {
  RunConfig cfg;
  cfg.scenario.kind = ScenarioKind::AcceleratingDetector;
  cfg.scenario.a = a;
  cfg.scenario.L = 1.0;
  cfg.scenario.m = m;
  cfg.scenario.anchor = Anchor::FullTraversal;
  cfg.detector.omega = omega;
  cfg.detector.lambda = 1.0;
  cfg.n_modes = n_modes;
  return cfg;
}

SweepRequest a_sweep(Observable obs, const std::string& grid = "log:0.01:2:40") {
  SweepRequest req;
  req.axis = SweepAxis::A;
  req.grid = parse_grid(grid);
  req.outputs = {obs};
  return req;
}

/// Run one sweep, append the CSV as an output file, collect tagged failures.
/// Optionally hands the raw outcome back for derived files.
void add_sweep_file(PresetRun* run, const std::string& name,
                    const RunConfig& cfg, std::vector<std::string> notes,
                    int threads, SweepOutcome* keep = nullptr) {
  SweepOutcome outcome = run_sweep(cfg, threads);
  OutputFile f;
  f.name = name;
  f.text = sweep_csv(cfg, outcome, notes);
  f.config = config_echo(cfg);
  f.rows = static_cast<int>(outcome.rows.size());
  f.warnings = outcome.warnings;
  run->files.push_back(std::move(f));
  for (const auto& why : outcome.failures)
    run->failures.push_back(name + ": " + why);
  if (keep) *keep = std::move(outcome);
}

/// Static-cavity frequency of mode k for mass m (L = 1): the per-mass
/// reference used by the "fair gap" presets.
double omega_static(int k, double m) { return std::hypot(k * kPi, m); }

/// tau grid shared by both scenarios of a rate preset: 60 points up to the
/// shorter of the two traversals, so difference curves subtract row-wise.
std::vector<double> rate_grid(double a, double m) {
  ScenarioConfig sc = vacuum_run(a, m, kPi).scenario;
  sc.kind = ScenarioKind::AcceleratingDetector;
  const double t_det = ScenarioContext(sc, 1).traversal_time();
  sc.kind = ScenarioKind::AcceleratingCavity;
  const double t_cav = ScenarioContext(sc, 1).traversal_time();
  const double t_end = std::min(t_det, t_cav);
  std::vector<double> grid;
  grid.reserve(60);
  for (int i = 1; i <= 60; ++i) grid.push_back(t_end * i / 60.0);
  return grid;
}

void preset_diff(PresetRun* run, const std::string& stem, double omega,
                 const std::vector<double>& masses, int threads) {
  for (double m : masses) {
    RunConfig cfg = vacuum_run(1.0, m, omega);
    cfg.sweep = a_sweep(Observable::DPScenarios);
    const std::string name =
        masses.size() == 1 ? stem + ".csv"
                           : stem + "_m" + tag_double(m) + ".csv";
    add_sweep_file(run, name, cfg,
                   {"signed dP = P_cavity - P_detector; the difference figure "
                    "plots |dP|/lambda^2",
                    "grid choice: 40 log-spaced a in [0.01, 2]"},
                   threads);
  }
}

void preset_masslesslimit(PresetRun* run, int threads) {
  for (double m : {0.0, 1e-4}) {
    RunConfig cfg = vacuum_run(1.0, m, kPi, 100);
    cfg.scenario.kind = ScenarioKind::AcceleratingCavity;
    cfg.sweep = a_sweep(Observable::P, "log:0.01:1:7");
    add_sweep_file(run, "masslesslimit_m" + tag_double(m) + ".csv", cfg,
                   {"accelerating cavity, N = 100: small-mass limit against "
                    "the massless curve",
                    "grid choice: 7 log-spaced a in [0.01, 1]"},
                   threads);
  }
}

void preset_excited1(PresetRun* run, int threads) {
  const std::pair<double, const char*> gaps[] = {{2.5 * kPi, "gap2p5pi"},
                                                 {3.5 * kPi, "gap3p5pi"}};
  for (const auto& [omega, tag] : gaps)
    for (double m : {0.0, 1.0}) {
      RunConfig cfg = vacuum_run(1.0, m, omega);
      cfg.state = FockState{3, 3};
      cfg.sweep = a_sweep(Observable::DPScenarios, "log:0.05:2:25");
      add_sweep_file(run,
                     std::string("plotexcited1_") + tag + "_m" +
                         tag_double(m) + ".csv",
                     cfg,
                     {"Fock state k = 3, n_3 = 3; both scenario probabilities "
                      "per row",
                      "grid choice: 25 log-spaced a in [0.05, 2]"},
                     threads);
    }
}

void preset_excited2(PresetRun* run, int threads) {
  struct Set {
    int k, n_k;
    const char* tag;
  };
  // Two parameter sets are in circulation for this comparison; both are
  // generated so either reading can be plotted.
  const Set sets[] = {{3, 3, "k3n3"}, {1, 1000, "k1n1000"}};
  for (const auto& set : sets) {
    struct Rule {
      const char* tag;
      const char* note;
      double omega_m0, omega_m1;
    };
    const double wk_massive = omega_static(set.k, 1.0);
    const Rule rules[] = {
        {"gap4pi", "gap rule: Omega = 4 pi for both masses", 4.0 * kPi,
         4.0 * kPi},
        {"gapoffset", "gap rule: Omega = omega_k(m=1) + 8.84 for both masses",
         wk_massive + 8.84, wk_massive + 8.84},
        {"gapratio",
         "gap rule: Omega = 3.37 omega_k(m) per mass (fixed gap ratio)",
         3.37 * omega_static(set.k, 0.0), 3.37 * wk_massive},
    };
    for (const auto& rule : rules)
      for (double m : {0.0, 1.0}) {
        RunConfig cfg =
            vacuum_run(1.0, m, m == 0.0 ? rule.omega_m0 : rule.omega_m1);
        cfg.state = FockState{set.k, set.n_k};
        cfg.sweep = a_sweep(Observable::DPScenarios, "log:0.05:2:25");
        add_sweep_file(run,
                       std::string("plotexcited2_") + set.tag + "_" +
                           rule.tag + "_m" + tag_double(m) + ".csv",
                       cfg,
                       {std::string("Fock state k = ") +
                            std::to_string(set.k) + ", n_k = " +
                            std::to_string(set.n_k),
                        rule.note,
                        "grid choice: 25 log-spaced a in [0.05, 2]"},
                       threads);
      }
  }
}

RunConfig coherent_run(double a, double m) {
  RunConfig cfg = vacuum_run(a, m, 1.9 * omega_static(2, m));
  CoherentState c;
  c.k = 2;
  c.alpha = {1.0, 0.0};
  cfg.state = c;
  return cfg;
}

void preset_coherent1(PresetRun* run, int threads) {
  for (double m : {0.0, 1.0}) {
    RunConfig cfg = coherent_run(1.0, m);
    cfg.sweep = a_sweep(Observable::DPScenarios, "log:0.05:2:25");
    add_sweep_file(run,
                   "plotsinglecoherent1_m" + tag_double(m) + ".csv", cfg,
                   {"coherent state alpha_2 = 1 (k = 2); gap Omega = 1.9 "
                    "omega_2(m), so the vacuum part stays negligible",
                    "grid choice: 25 log-spaced a in [0.05, 2]"},
                   threads);
  }
}

void preset_coherent2(PresetRun* run, int threads) {
  for (double m : {0.0, 1.0}) {
    RunConfig cfg = coherent_run(1.0, m);
    cfg.sweep = a_sweep(Observable::DPScenarios, "log:0.05:2:25");
    add_sweep_file(run,
                   "plotsinglecoherent2_dP_m" + tag_double(m) + ".csv", cfg,
                   {"coherent state alpha_2 = 1 (k = 2); the figure plots "
                    "|dP|/lambda^2",
                    "grid choice: 25 log-spaced a in [0.05, 2]"},
                   threads);
  }

  // Derived massless/massive ratio of the excited-state excess (the vacuum
  // part is excluded, matching how the ratio figure is defined).
  const std::vector<double> grid = {0.2, 0.3, 0.5, 0.7, 1.0, 1.4, 2.0};
  CsvWriter csv({"a", "excess_detector_m0", "excess_detector_m1",
                 "ratio_detector", "excess_cavity_m0", "excess_cavity_m1",
                 "ratio_cavity"});
  csv.note("ratio_x = excess_x(m=0) / excess_x(m=1) at per-mass gap "
           "Omega = 1.9 omega_2(m)");
  csv.note("vacuum contribution excluded from both numerator and denominator");
  const std::string name = "plotsinglecoherent2_ratio.csv";
  for (double a : grid) {
    try {
      double excess[2][2];  // [mass index][scenario index: det, cav]
      for (int mi = 0; mi < 2; ++mi) {
        const RunConfig cfg = coherent_run(a, mi == 0 ? 0.0 : 1.0);
        ScenarioConfig sc = cfg.scenario;
        sc.kind = ScenarioKind::AcceleratingDetector;
        excess[mi][0] = transition_probability(ScenarioContext(sc, cfg.n_modes),
                                               cfg.detector, cfg.state,
                                               cfg.quad)
                            .excess_part;
        sc.kind = ScenarioKind::AcceleratingCavity;
        excess[mi][1] = transition_probability(ScenarioContext(sc, cfg.n_modes),
                                               cfg.detector, cfg.state,
                                               cfg.quad)
                            .excess_part;
      }
      csv.add_row({a, excess[0][0], excess[1][0], excess[0][0] / excess[1][0],
                   excess[0][1], excess[1][1], excess[0][1] / excess[1][1]});
    } catch (const std::exception& e) {
      run->failures.push_back(name + ": a = " + format_double(a) + ": " +
                              e.what());
    }
  }
  OutputFile f;
  f.name = name;
  f.text = csv.str();
  f.rows = csv.rows();
  f.derived_from =
      "direct evaluation of the excited-state excess for m = 0 and m = 1 on "
      "a fixed a-grid; configs as in plotsinglecoherent2_dP_m*.csv";
  run->files.push_back(std::move(f));
}

void preset_resonance(PresetRun* run, int threads) {
  for (double a : {0.1, 1.0}) {
    RunConfig cfg = vacuum_run(a, 0.0, kPi);
    cfg.state = FockState{3, 3};
    SweepRequest req;
    req.axis = SweepAxis::Omega;
    req.grid = parse_grid("lin:" + format_double(kPi / 20.0) + ":" +
                          format_double(4.95 * kPi) + ":99");
    req.outputs = {Observable::P};
    cfg.sweep = req;
    add_sweep_file(run, "plotresonance1_a" + tag_double(a) + ".csv", cfg,
                   {"accelerating detector, Fock k = 3, n_3 = 3: response "
                    "versus the detector gap",
                    "grid choice: 99 linear Omega in (0, 5 pi)"},
                   threads);
  }
}

/// Rate presets share one recipe: both scenarios on a common tau grid plus
/// (optionally) the row-wise scenario difference.
void rate_curves(PresetRun* run, const std::string& stem, double a, double m,
                 double omega, const FieldState& state, bool with_diff,
                 int threads) {
  const std::vector<double> grid = rate_grid(a, m);
  SweepOutcome det_out, cav_out;
  const std::string mtag = "_m" + tag_double(m);

  for (int kind = 0; kind < 2; ++kind) {
    RunConfig cfg = vacuum_run(a, m, omega);
    cfg.state = state;
    cfg.scenario.kind = kind == 0 ? ScenarioKind::AcceleratingDetector
                                  : ScenarioKind::AcceleratingCavity;
    SweepRequest req;
    req.axis = SweepAxis::Tau;
    req.grid = grid;
    req.outputs = {Observable::Rate};
    cfg.sweep = req;
    add_sweep_file(run,
                   stem + mtag + (kind == 0 ? "_det.csv" : "_cav.csv"), cfg,
                   {"transition rate Fdot(tau); grid ends at the shorter of "
                    "the two scenario traversals so curves compare row-wise"},
                   threads, kind == 0 ? &det_out : &cav_out);
  }

  if (!with_diff) return;
  CsvWriter csv({"tau", "Fdot_detector", "Fdot_cavity", "dFdot"});
  csv.note("dFdot = Fdot_detector - Fdot_cavity");
  size_t ci = 0;
  for (const auto& drow : det_out.rows) {
    while (ci < cav_out.rows.size() && cav_out.rows[ci][0] < drow[0]) ++ci;
    if (ci == cav_out.rows.size()) break;
    if (cav_out.rows[ci][0] != drow[0]) continue;  // point failed on one side
    csv.add_row({drow[0], drow[1], cav_out.rows[ci][1],
                 drow[1] - cav_out.rows[ci][1]});
  }
  OutputFile f;
  f.name = stem + mtag + "_dFdot.csv";
  f.text = csv.str();
  f.rows = csv.rows();
  f.derived_from = "row-wise from " + stem + mtag + "_det.csv and " + stem +
                   mtag + "_cav.csv";
  run->files.push_back(std::move(f));
}

void preset_rate1(PresetRun* run, int threads) {
  rate_curves(run, "plotrate1", 0.5, 0.0, kPi, VacuumState{}, false, threads);
  rate_curves(run, "plotrate1", 0.02, 1.0, kPi, VacuumState{}, false, threads);
}

void preset_rate2(PresetRun* run, int threads) {
  for (double m : {0.0, 1.0})
    rate_curves(run, "plotrate2", 0.5, m, 1.5 * kPi, FockState{1, 100}, true,
                threads);
}

void preset_rate3(PresetRun* run, int threads) {
  for (double m : {0.0, 1.0})
    rate_curves(run, "plotrate3", 0.5, m, 1.012 * omega_static(1, m),
                FockState{1, 100}, true, threads);
}

void preset_convergence(PresetRun* run, int threads) {
  for (double a : {0.01, 1.0}) {
    RunConfig cfg = vacuum_run(a, 0.0, kPi);
    cfg.scenario.kind = ScenarioKind::AcceleratingCavity;
    SweepRequest req;
    req.axis = SweepAxis::NModes;
    req.grid = parse_grid("5,10,15,25,50,75,100,150,200");
    req.outputs = {Observable::P};
    cfg.sweep = req;
    add_sweep_file(run, "cavconvergence1_a" + tag_double(a) + ".csv", cfg,
                   {"accelerating cavity, vacuum: P as a function of the "
                    "mode cutoff N"},
                   threads);
  }
}

}  // namespace

std::vector<std::string> preset_names() {
  return {std::begin(kNames), std::end(kNames)};
}

std::string preset_description(const std::string& name) {
  if (name == "plotdiff1")
    return "vacuum |P_cavity - P_detector| vs a; Omega = pi/L, m = 0";
  if (name == "plotdiff2")
    return "vacuum |P_cavity - P_detector| vs a; larger gap Omega = 2pi/L";
  if (name == "plotdiff3")
    return "vacuum scenario difference vs a for m = 0 and m = 1";
  if (name == "masslesslimit")
    return "accelerating-cavity P vs a at N = 100: m = 1e-4 against m = 0";
  if (name == "plotexcited1")
    return "Fock k=3, n_3=3: scenario probabilities vs a at gaps 2.5pi/L "
           "and 3.5pi/L, m in {0, 1}";
  if (name == "plotexcited2")
    return "high-occupation scenario difference vs a under three gap rules; "
           "parameter sets k=3,n_3=3 and k=1,n_k=1000";
  if (name == "plotsinglecoherent1")
    return "coherent alpha_2 = 1: scenario probabilities vs a at "
           "Omega = 1.9 omega_2(m), m in {0, 1}";
  if (name == "plotsinglecoherent2")
    return "coherent k = 2: scenario difference vs a plus the "
           "massless/massive excess ratio";
  if (name == "plotresonance1")
    return "Fock k=3, n_3=3: P vs detector gap in (0, 5pi) at a = 0.1 and "
           "a = 1.0";
  if (name == "plotrate1")
    return "vacuum rate vs tau for (m=0, a=0.5) and (m=1, a=0.02), both "
           "scenarios";
  if (name == "plotrate2")
    return "Fock k=1, n_k=100 rate vs tau at a = 0.5, Omega = 1.5pi/L, "
           "m in {0, 1}, with scenario difference";
  if (name == "plotrate3")
    return "Fock k=1, n_k=100 rate vs tau at per-mass gap "
           "Omega = 1.012 omega_1(m)";
  if (name == "cavconvergence1")
    return "accelerating-cavity vacuum P vs mode cutoff N at a = 0.01 and "
           "a = 1.0";
  throw UsageError("unknown preset '" + name + "'");
}

PresetRun run_preset(const std::string& name, int threads) {
  preset_description(name);  // validates the name
  PresetRun run;
  if (name == "plotdiff1") preset_diff(&run, "plotdiff1", kPi, {0.0}, threads);
  else if (name == "plotdiff2")
    preset_diff(&run, "plotdiff2", 2.0 * kPi, {0.0}, threads);
  else if (name == "plotdiff3")
    preset_diff(&run, "plotdiff3", kPi, {0.0, 1.0}, threads);
  else if (name == "masslesslimit") preset_masslesslimit(&run, threads);
  else if (name == "plotexcited1") preset_excited1(&run, threads);
  else if (name == "plotexcited2") preset_excited2(&run, threads);
  else if (name == "plotsinglecoherent1") preset_coherent1(&run, threads);
  else if (name == "plotsinglecoherent2") preset_coherent2(&run, threads);
  else if (name == "plotresonance1") preset_resonance(&run, threads);
  else if (name == "plotrate1") preset_rate1(&run, threads);
  else if (name == "plotrate2") preset_rate2(&run, threads);
  else if (name == "plotrate3") preset_rate3(&run, threads);
  else if (name == "cavconvergence1") preset_convergence(&run, threads);
  return run;
}

}  // namespace udw
