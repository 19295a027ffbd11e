#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jifsim/config.hpp"

namespace jifsim {

// A calibration target: find kernel parameters under which a journal with
// the given publishing profile (already applied to `base`) reaches a target
// mean impact factor.
struct CalibrationPreset {
  std::string name;
  SimConfig base;          // review cycle, reference budget etc. pre-applied
  double target_if = 1.0;  // must be > 0

  // Stage-1 coarse grid over the three searched parameters. The shipped
  // defaults cover steep short-memory kernels through flat long-memory ones.
  std::vector<double> alpha_grid = {15, 60, 105, 150, 195};
  std::vector<double> beta_grid = {10, 25, 40};
  std::vector<double> gamma_grid = {3, 12, 24, 48};

  // Stage-2 refinement bounds; proposals are clamped into these.
  double alpha_min = 5, alpha_max = 400;
  double beta_min = 2, beta_max = 120;
  double gamma_min = 1, gamma_max = 400;

  int budget = 200;        // parameter points evaluated, both stages combined
  int replications = 4;    // simulations averaged per point
  double tolerance = 0.15; // relative: converged when
                           // |achieved - target| <= tolerance * target
  uint64_t seed_base = 1;
};

struct CalibrationEvaluation {
  int index = 0;          // evaluation order
  KernelParams params;
  double mean_if = 0.0;
  double std_if = 0.0;    // population std over the point's replications
  double abs_error = 0.0; // |mean_if - target|
  std::string stage;      // "grid" or "refine"
};

struct CalibrationResult {
  std::string preset_name;
  KernelParams best;
  double achieved_if = 0.0;
  double achieved_std = 0.0;
  double target_if = 0.0;
  bool converged = false;  // |achieved - target| within tolerance
  std::vector<CalibrationEvaluation> log;  // every evaluated point, in order
};

void validate(const CalibrationPreset& preset);

// Derivative-free search: evaluate the coarse grid (in grid order, stopping
// early if the budget runs out), then refine around the best point by
// repeatedly probing one halving step along each parameter axis and moving
// whenever a probe improves the error. Every point is scored with the same
// replication seeds (common random numbers), which makes the objective
// deterministic and point comparisons low-noise; replications of a point run
// on the worker pool. Never throws on a hopeless target: when the budget is
// exhausted outside the tolerance the best point so far is returned with
// converged = false.
CalibrationResult calibrate(const CalibrationPreset& preset, int parallelism);

}  // namespace jifsim
