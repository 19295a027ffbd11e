#include "jifsim/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "jifsim/errors.hpp"
#include "jifsim/sweep.hpp"

namespace jifsim {

void validate(const CalibrationPreset& preset) {
  if (!(preset.target_if > 0.0) || !std::isfinite(preset.target_if)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "calibration.target_if",
                      "must be a finite value > 0");
  }
  if (preset.alpha_grid.empty() || preset.beta_grid.empty() ||
      preset.gamma_grid.empty()) {
    throw ConfigError(ConfigErrorCode::kInvariant, "calibration.search",
                      "every searched parameter needs at least one grid value");
  }
  if (preset.budget < 1) {
    throw ConfigError(ConfigErrorCode::kInvariant, "calibration.budget",
                      "must be >= 1");
  }
  if (preset.replications < 1) {
    throw ConfigError(ConfigErrorCode::kInvariant, "calibration.replications",
                      "must be >= 1");
  }
  if (!(preset.tolerance > 0.0)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "calibration.tolerance",
                      "must be > 0");
  }
  SimConfig probe = preset.base;
  validate(probe);
  if (probe.years < 3) {
    throw ConfigError(ConfigErrorCode::kInvariant, "years",
                      "calibration needs at least 3 simulated years");
  }
}

namespace {

// The largest gap between adjacent grid values, used to size the first
// refinement step of an axis.
double max_spacing(const std::vector<double>& grid) {
  double spacing = 0.0;
  for (size_t i = 1; i < grid.size(); ++i) {
    spacing = std::max(spacing, std::abs(grid[i] - grid[i - 1]));
  }
  return spacing;
}

struct PointScore {
  double mean = 0.0;
  double stddev = 0.0;
};

}  // namespace

CalibrationResult calibrate(const CalibrationPreset& preset, int parallelism) {
  validate(preset);

  CalibrationResult result;
  result.preset_name = preset.name;
  result.target_if = preset.target_if;

  // Common random numbers: every point reuses these replication seeds, so a
  // point's score is a pure function of its parameters.
  std::vector<uint64_t> seeds(static_cast<size_t>(preset.replications));
  for (int rep = 0; rep < preset.replications; ++rep) {
    seeds[static_cast<size_t>(rep)] =
        mix64(preset.seed_base + static_cast<uint64_t>(rep) + 1);
  }

  // Cache by parameter triple so revisited points never re-spend budget.
  std::map<std::tuple<double, double, double>, PointScore> cache;
  int evaluations = 0;

  auto evaluate = [&](double alpha, double beta, double gamma,
                      const char* stage) -> PointScore {
    const auto key = std::make_tuple(alpha, beta, gamma);
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    SimConfig config = preset.base;
    config.kernel.alpha = alpha;
    config.kernel.beta = beta;
    config.kernel.gamma = gamma;
    validate(config);

    std::vector<double> values(seeds.size());
    run_parallel_tasks(
        static_cast<int64_t>(seeds.size()), parallelism, [&](int64_t rep) {
          SimConfig rep_config = config;
          rep_config.seed = seeds[static_cast<size_t>(rep)];
          values[static_cast<size_t>(rep)] =
              replication_scalar(run_simulation(rep_config));
        });

    PointScore score;
    for (double v : values) score.mean += v;
    score.mean /= static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - score.mean) * (v - score.mean);
    score.stddev = std::sqrt(sq / static_cast<double>(values.size()));
    cache.emplace(key, score);

    CalibrationEvaluation entry;
    entry.index = evaluations;
    entry.params = config.kernel;
    entry.mean_if = score.mean;
    entry.std_if = score.stddev;
    entry.abs_error = std::abs(score.mean - preset.target_if);
    entry.stage = stage;
    result.log.push_back(entry);
    evaluations += 1;
    return score;
  };

  double best_alpha = preset.alpha_grid.front();
  double best_beta = preset.beta_grid.front();
  double best_gamma = preset.gamma_grid.front();
  double best_error = std::numeric_limits<double>::infinity();
  PointScore best_score;

  auto consider = [&](double alpha, double beta, double gamma,
                      const char* stage) {
    const PointScore score = evaluate(alpha, beta, gamma, stage);
    const double error = std::abs(score.mean - preset.target_if);
    if (error < best_error) {
      best_error = error;
      best_alpha = alpha;
      best_beta = beta;
      best_gamma = gamma;
      best_score = score;
    }
  };

  const double accept_error = preset.tolerance * preset.target_if;

  // Stage 1: coarse grid, in grid order, within budget.
  [&] {
    for (double alpha : preset.alpha_grid) {
      for (double beta : preset.beta_grid) {
        for (double gamma : preset.gamma_grid) {
          if (evaluations >= preset.budget) return;
          consider(alpha, beta, gamma, "grid");
        }
      }
    }
  }();

  // Stage 2: halving refinement around the best point. Probe one step along
  // each axis per round; move to any improvement, halve the steps when a
  // full round brings none. Stop once the error sits deep inside the
  // tolerance band, steps become negligible, or the budget is spent.
  {
    double step_alpha = std::max(max_spacing(preset.alpha_grid) / 2.0, 1.0);
    double step_beta = std::max(max_spacing(preset.beta_grid) / 2.0, 1.0);
    double step_gamma = std::max(max_spacing(preset.gamma_grid) / 2.0, 1.0);
    const double min_step = 0.25;

    while (evaluations < preset.budget && best_error > 0.25 * accept_error &&
           (step_alpha > min_step || step_beta > min_step ||
            step_gamma > min_step)) {
      const double base_error = best_error;
      struct Probe {
        double alpha, beta, gamma;
      };
      const Probe probes[] = {
          {std::clamp(best_alpha + step_alpha, preset.alpha_min,
                      preset.alpha_max),
           best_beta, best_gamma},
          {std::clamp(best_alpha - step_alpha, preset.alpha_min,
                      preset.alpha_max),
           best_beta, best_gamma},
          {best_alpha,
           std::clamp(best_beta + step_beta, preset.beta_min, preset.beta_max),
           best_gamma},
          {best_alpha,
           std::clamp(best_beta - step_beta, preset.beta_min, preset.beta_max),
           best_gamma},
          {best_alpha, best_beta,
           std::clamp(best_gamma + step_gamma, preset.gamma_min,
                      preset.gamma_max)},
          {best_alpha, best_beta,
           std::clamp(best_gamma - step_gamma, preset.gamma_min,
                      preset.gamma_max)},
      };
      for (const Probe& probe : probes) {
        if (evaluations >= preset.budget) break;
        consider(probe.alpha, probe.beta, probe.gamma, "refine");
      }
      if (best_error >= base_error) {
        step_alpha /= 2.0;
        step_beta /= 2.0;
        step_gamma /= 2.0;
      }
    }
  }

  result.best.alpha = best_alpha;
  result.best.beta = best_beta;
  result.best.gamma = best_gamma;
  result.best.delta = preset.base.kernel.delta;
  result.achieved_if = best_score.mean;
  result.achieved_std = best_score.stddev;
  result.converged = best_error <= accept_error;
  return result;
}

}  // namespace jifsim
