// Command-line front end: run simulations, sweeps, and calibrations from
// JSON config files and write CSV artifacts for external analysis.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "jifsim/calibrate.hpp"
#include "jifsim/emit.hpp"
#include "jifsim/engine.hpp"
#include "jifsim/errors.hpp"
#include "jifsim/manifest.hpp"
#include "jifsim/metrics.hpp"
#include "jifsim/sweep.hpp"

namespace {

using namespace jifsim;

struct CommonFlags {
  std::string config_path;
  std::string out_dir;
  uint64_t seed = 0;
  int jobs = 0;
  int replications = 0;
};

// Register the shared flags on one subcommand. Every subcommand accepts the
// same spelling; which of them it honors is documented per command.
void add_common_flags(CLI::App* sub, CommonFlags* flags, bool with_jobs,
                      bool with_replications) {
  sub->add_option("--config", flags->config_path,
                  "JSON config file (omit for the built-in defaults)");
  sub->add_option("--seed", flags->seed,
                  "override the run seed (sweeps/calibrations: the seed base)");
  sub->add_option("--out", flags->out_dir, "override the output directory");
  if (with_jobs) {
    sub->add_option("--jobs", flags->jobs,
                    "worker threads (default: hardware concurrency)");
  }
  if (with_replications) {
    sub->add_option("--replications", flags->replications,
                    "override the replication count");
  }
}

RunManifest load_manifest(const CLI::App* sub, const CommonFlags& flags) {
  RunManifest manifest;
  if (sub->count("--config") > 0) {
    manifest = parse_manifest_file(flags.config_path);
  }
  if (sub->count("--out") > 0) manifest.output_dir = flags.out_dir;
  return manifest;
}

int default_jobs() {
  const unsigned hardware = std::thread::hardware_concurrency();
  return std::max(1, static_cast<int>(hardware));
}

int resolve_jobs(const CLI::App* sub, const CommonFlags& flags) {
  if (sub->count("--jobs") == 0) return default_jobs();
  if (flags.jobs < 1) {
    throw ConfigError(ConfigErrorCode::kInvariant, "jobs", "must be >= 1");
  }
  return flags.jobs;
}

void report_files(const std::vector<std::filesystem::path>& files) {
  for (const auto& path : files) {
    std::cout << "wrote " << path.string() << '\n';
  }
}

int run_simulate(const CLI::App* sub, const CommonFlags& flags) {
  RunManifest manifest = load_manifest(sub, flags);
  if (sub->count("--seed") > 0) manifest.config.seed = flags.seed;

  const SimResult result = run_simulation(manifest.config);
  if (result.no_citation_possible) {
    std::cerr << "warning: the review-cycle gate can never pass; the run has "
                 "no citations\n";
  }
  report_files(emit_simulation(manifest, result));
  std::cout << "articles " << result.articles.size() - 1 << ", edges "
            << result.ledger.edges().size() << ", abandoned slots "
            << result.abandoned_slots << ", runtime "
            << format_real(result.runtime_seconds) << "s\n";
  return 0;
}

int run_sweep_command(const CLI::App* sub, const CommonFlags& flags) {
  RunManifest manifest = load_manifest(sub, flags);
  if (manifest.sweep.axes.empty()) {
    throw ConfigError(ConfigErrorCode::kInvariant, "sweep.axes",
                      "a sweep needs at least one axis");
  }
  if (sub->count("--seed") > 0) manifest.sweep.seed_base = flags.seed;
  if (sub->count("--replications") > 0) {
    if (flags.replications < 1) {
      throw ConfigError(ConfigErrorCode::kInvariant, "replications",
                        "must be >= 1");
    }
    manifest.sweep.replications = flags.replications;
  }

  const SweepResult result = run_sweep(manifest.sweep, resolve_jobs(sub, flags));
  report_files(emit_sweep(manifest, result));
  std::cout << "cells " << result.cells.size() << ", replications "
            << manifest.sweep.replications << '\n';
  return 0;
}

int run_calibrate(const CLI::App* sub, const CommonFlags& flags) {
  RunManifest manifest = load_manifest(sub, flags);
  if (manifest.calibration.name.empty()) {
    throw ConfigError(ConfigErrorCode::kInvariant, "calibration.name",
                      "calibrate needs a config with a named calibration "
                      "block");
  }
  if (sub->count("--seed") > 0) manifest.calibration.seed_base = flags.seed;
  if (sub->count("--replications") > 0) {
    if (flags.replications < 1) {
      throw ConfigError(ConfigErrorCode::kInvariant, "replications",
                        "must be >= 1");
    }
    manifest.calibration.replications = flags.replications;
  }
  validate(manifest.calibration);

  const CalibrationResult result =
      calibrate(manifest.calibration, resolve_jobs(sub, flags));
  report_files(emit_calibration(manifest, result));
  std::cout << "preset " << result.preset_name << ": target "
            << format_real(result.target_if) << ", achieved "
            << format_real(result.achieved_if) << " at alpha "
            << format_real(result.best.alpha) << ", beta "
            << format_real(result.best.beta) << ", gamma "
            << format_real(result.best.gamma) << " ("
            << result.log.size() << " evaluations)\n";
  if (!result.converged) {
    std::cerr << "calibration did not converge within tolerance\n";
    return 4;
  }
  return 0;
}

int run_curves(const CLI::App* sub, const CommonFlags& flags) {
  RunManifest manifest = load_manifest(sub, flags);
  report_files(emit_curves(manifest, manifest.config.kernel));
  return 0;
}

int run_presets_list() {
  // The presets shipped as config files under presets/. Kept in sync with
  // those files by the test suite.
  struct PresetRow {
    const char* name;
    double target_if;
    int review_cycle_months;
    int avg_refs;
  };
  const PresetRow rows[] = {
      {"nature-cell-biology", 19.30, 5, 60},
      {"nature-chemical-biology", 14.08, 6, 50},
      {"ieee-tac", 2.65, 17, 30},
      {"laa", 0.94, 10, 20},
  };
  for (const PresetRow& row : rows) {
    std::cout << row.name << "  target_if=" << format_real(row.target_if)
              << "  review_cycle_months=" << row.review_cycle_months
              << "  avg_refs=" << row.avg_refs << "  presets/" << row.name
              << ".json\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"journal publication and citation dynamics simulator"};
  app.require_subcommand(1);

  CommonFlags flags;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run one simulation and write its artifacts");
  add_common_flags(simulate, &flags, false, false);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "run a parameter grid with replications and write sweep.csv");
  add_common_flags(sweep, &flags, true, true);

  CLI::App* calibrate_cmd = app.add_subcommand(
      "calibrate", "search kernel parameters for a target impact factor");
  add_common_flags(calibrate_cmd, &flags, true, true);

  CLI::App* curves = app.add_subcommand(
      "curves", "tabulate the citation-probability factors for plotting");
  add_common_flags(curves, &flags, false, false);

  CLI::App* presets =
      app.add_subcommand("presets", "inspect the shipped journal presets");
  presets->require_subcommand(1);
  presets->add_subcommand("list", "list the shipped presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) return run_simulate(simulate, flags);
    if (sweep->parsed()) return run_sweep_command(sweep, flags);
    if (calibrate_cmd->parsed()) return run_calibrate(calibrate_cmd, flags);
    if (curves->parsed()) return run_curves(curves, flags);
    if (presets->parsed()) return run_presets_list();
  } catch (const ConfigError& error) {
    std::cerr << "config error: " << error.what() << '\n';
    return error.code() == ConfigErrorCode::kMissingFile ? 3 : 2;
  } catch (const IoError& error) {
    std::cerr << "io error: " << error.what() << '\n';
    return 3;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 0;
}
