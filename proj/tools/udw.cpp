// SPDX-License-Identifier: Apache-2.0
//
// udw -- Unruh-DeWitt detector responses in accelerated cavity setups.
//
//   udw preset <name> [--out DIR] [--threads K]   figure-reproducing runs
//   udw preset --list                             catalog with descriptions
//   udw sweep <spec.cfg> [--out DIR] [--threads K]
//   udw converge <spec.cfg> --n-list 5,15,...     mode-sum convergence table
//   udw modes <spec.cfg> [--dump]                 spectrum (+ profiles)
//
// Exit codes: 0 success, 1 numerical failure (partial results are still
// written and flagged in the manifest), 2 usage or config error.
// UDW_CACHE_DIR enables the on-disk spectrum cache.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "udw/config.hpp"
#include "udw/csv.hpp"
#include "udw/presets.hpp"
#include "udw/sweep.hpp"
#include "udw/version.hpp"

namespace {

using namespace udw;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

int finish_bundle(const std::string& out_dir, const std::string& label,
                  const std::string& command,
                  const std::vector<OutputFile>& files,
                  const std::vector<std::string>& failures, double elapsed) {
  const std::string manifest =
      write_bundle(out_dir, label, command, files, failures, elapsed);
  for (const auto& f : files)
    std::printf("wrote %s (%d rows)\n",
                (std::filesystem::path(out_dir) / f.name).string().c_str(),
                f.rows);
  std::printf("wrote %s\n", manifest.c_str());
  for (const auto& f : files)
    for (const auto& w : f.warnings)
      std::fprintf(stderr, "warning [%s]: %s\n", f.name.c_str(), w.c_str());
  if (!failures.empty()) {
    for (const auto& why : failures)
      std::fprintf(stderr, "failed: %s\n", why.c_str());
    std::fprintf(stderr, "%zu grid point(s) failed; results are partial\n",
                 failures.size());
    return 1;
  }
  return 0;
}

int cmd_preset(const std::string& name, const std::string& out_dir,
               int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const PresetRun run = run_preset(name, threads);
  return finish_bundle(out_dir, name, "udw preset " + name, run.files,
                       run.failures, seconds_since(t0));
}

int cmd_sweep(const std::string& cfg_path, const std::string& out_dir,
              int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = parse_config_file(cfg_path);
  if (!cfg.sweep)
    throw UsageError(cfg_path + ": no sweep.axis/sweep.grid in config");
  const SweepOutcome outcome = run_sweep(cfg, threads);

  OutputFile f;
  f.name = stem_of(cfg_path) + ".csv";
  f.text = sweep_csv(cfg, outcome);
  f.config = config_echo(cfg);
  f.rows = static_cast<int>(outcome.rows.size());
  f.warnings = outcome.warnings;
  return finish_bundle(out_dir, stem_of(cfg_path), "udw sweep " + cfg_path,
                       {f}, outcome.failures, seconds_since(t0));
}

int cmd_converge(const std::string& cfg_path, const std::string& n_list_text,
                 const std::string& out_dir, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = parse_config_file(cfg_path);
  cfg.sweep.reset();  // the N axis comes from --n-list

  std::vector<int> n_list;
  for (double v : parse_grid(n_list_text)) {
    if (v < 1.0 || v != static_cast<int>(v))
      throw UsageError("--n-list must be ascending integers >= 1");
    n_list.push_back(static_cast<int>(v));
  }

  const ConvergenceReport report = convergence_report(cfg, n_list, threads);
  std::fputs(convergence_table(report).c_str(), stdout);

  if (out_dir.empty()) return 0;
  OutputFile f;
  f.name = stem_of(cfg_path) + "_converge.csv";
  f.text = convergence_csv(cfg, report);
  f.config = config_echo(cfg);
  f.rows = static_cast<int>(report.rows.size());
  return finish_bundle(out_dir, stem_of(cfg_path) + "_converge",
                       "udw converge " + cfg_path + " --n-list " + n_list_text,
                       {f}, {}, seconds_since(t0));
}

const char* mode_kind_name(ModeKind kind) {
  switch (kind) {
    case ModeKind::StaticCavity: return "static cavity";
    case ModeKind::ConformalMassless: return "conformal massless";
    case ModeKind::RindlerMasslessDirect: return "direct Rindler massless";
    case ModeKind::RindlerMassive: return "Rindler massive";
  }
  return "?";
}

int cmd_modes(const std::string& cfg_path, bool dump) {
  const RunConfig cfg = parse_config_file(cfg_path);
  const ScenarioContext ctx = make_context(cfg);
  const ModeFamily& fam = ctx.family();

  std::printf("# family: %s, N = %d, m = %s, support [%s, %s]\n",
              mode_kind_name(fam.kind()), fam.size(),
              format_double(fam.mass()).c_str(),
              format_double(fam.wall_lo()).c_str(),
              format_double(fam.wall_hi()).c_str());
  if (!dump) {
    std::printf("%4s  %22s\n", "n", "omega_n");
    for (int n = 1; n <= fam.size(); ++n)
      std::printf("%4d  %22.17g\n", n, fam.omega(n));
    return 0;
  }

  // Full dump: spectrum as comments, then profile samples as CSV.
  for (int n = 1; n <= fam.size(); ++n)
    std::printf("# omega_%d = %.17g\n", n, fam.omega(n));
  std::printf("q");
  for (int n = 1; n <= fam.size(); ++n) std::printf(",u_%d", n);
  std::printf("\n");
  const int samples = 129;
  for (int i = 0; i < samples; ++i) {
    const double q = fam.wall_lo() +
                     (fam.wall_hi() - fam.wall_lo()) * i / (samples - 1);
    std::printf("%.17g", q);
    for (int n = 1; n <= fam.size(); ++n)
      std::printf(",%.17g", fam.profile(n, q));
    std::printf("\n");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unruh-DeWitt detector responses in accelerated cavities"};
  app.set_version_flag("--version", std::string("udw ") + udw::kVersion);
  app.require_subcommand(1);

  std::string preset_name, cfg_path, out_dir = ".", n_list;
  int threads = 1;
  bool list_presets = false, dump = false;

  CLI::App* preset = app.add_subcommand("preset", "run a figure preset");
  preset->add_option("name", preset_name, "preset name");
  preset->add_flag("--list", list_presets, "list available presets");
  preset->add_option("--out", out_dir, "output directory (default .)");
  preset->add_option("--threads", threads, "worker threads (default 1)")
      ->check(CLI::Range(1, 256));

  CLI::App* sweep = app.add_subcommand("sweep", "run a sweep config");
  sweep->add_option("spec", cfg_path, "config file")->required();
  sweep->add_option("--out", out_dir, "output directory (default .)");
  sweep->add_option("--threads", threads, "worker threads (default 1)")
      ->check(CLI::Range(1, 256));

  CLI::App* converge =
      app.add_subcommand("converge", "mode-sum convergence report");
  converge->add_option("spec", cfg_path, "config file")->required();
  converge->add_option("--n-list", n_list, "ascending N values, e.g. 5,15,50")
      ->required();
  converge->add_option("--out", out_dir,
                       "also write CSV + manifest to this directory");
  converge->add_option("--threads", threads, "worker threads (default 1)")
      ->check(CLI::Range(1, 256));

  CLI::App* modes = app.add_subcommand("modes", "print the mode spectrum");
  modes->add_option("spec", cfg_path, "config file")->required();
  modes->add_flag("--dump", dump, "also dump sampled mode profiles as CSV");

  // converge: --out given explicitly? (default "." means "write" for the
  // other commands, but converge only writes when asked)
  bool converge_out = false;
  converge->callback([&] { converge_out = converge->count("--out") > 0; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (preset->parsed()) {
      if (list_presets) {
        for (const auto& name : udw::preset_names())
          std::printf("%-20s %s\n", name.c_str(),
                      udw::preset_description(name).c_str());
        return 0;
      }
      if (preset_name.empty())
        throw udw::UsageError("preset: name required (or --list)");
      return cmd_preset(preset_name, out_dir, threads);
    }
    if (sweep->parsed()) return cmd_sweep(cfg_path, out_dir, threads);
    if (converge->parsed())
      return cmd_converge(cfg_path, n_list, converge_out ? out_dir : "",
                          threads);
    if (modes->parsed()) return cmd_modes(cfg_path, dump);
  } catch (const udw::UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const udw::DomainError& e) {  // includes RigidityError
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
