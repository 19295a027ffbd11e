#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jifsim/engine.hpp"
#include "jifsim/metrics.hpp"

namespace jifsim {

// One grid dimension. An axis varies one or more config fields together:
// a single-field axis lists scalar values; a multi-field axis (for example
// paired kernel.alpha / kernel.beta settings) lists one row of values per
// grid position.
struct SweepAxis {
  std::string name;                      // defaults to the joined field paths
  std::vector<std::string> fields;       // dotted config paths
  std::vector<std::vector<double>> rows; // one row per position; row length
                                         // equals fields length
};

struct SweepSpec {
  SimConfig base;
  std::vector<SweepAxis> axes;  // first axis is the outermost grid dimension
  int replications = 20;
  uint64_t seed_base = 1;
};

// Aggregates of one grid cell over its replications.
struct CellStats {
  std::vector<double> values;      // per-replication scalar, replication order
  double mean = 0.0;
  double stddev = 0.0;             // population standard deviation
  double min = 0.0;
  double max = 0.0;
  double abandoned_fraction = 0.0; // mean over replications
  double duplicate_rate = 0.0;     // duplicate refs per edge, mean over reps
};

struct SweepResult {
  SweepSpec spec;
  std::vector<CellStats> cells;  // grid order, first axis outermost
};

// Grid bookkeeping.
int64_t grid_size(const SweepSpec& spec);
// The config of one cell: the base with every axis value applied. Cell
// indices enumerate the grid with the first axis outermost.
SimConfig cell_config(const SweepSpec& spec, int64_t cell_index);

// The seed of one (cell, replication) run: a bijective mix of the root seed
// plus the run's linear index, so distinct runs always get distinct seeds
// and any run is reproducible in isolation.
uint64_t replication_seed(uint64_t seed_base, int64_t cell_index,
                          int replication, int replications);

// The scalar a sweep aggregates: the mean over journals of each journal's
// average impact factor over the computed years (3 through the final year).
double replication_scalar(const SimResult& result);

// Run every cell x replication on a bounded worker pool. Results land in
// preassigned slots keyed by (cell, replication), so the outcome is
// bit-identical regardless of worker count or scheduling. Every cell config
// is validated before any simulation starts.
SweepResult run_sweep(const SweepSpec& spec, int parallelism);

// Execute `count` independent tasks on at most `parallelism` workers. Tasks
// must write only to preassigned slots; under that contract the combined
// outcome is independent of worker count and scheduling.
void run_parallel_tasks(int64_t count, int parallelism,
                        const std::function<void(int64_t)>& task);

// Monotone-trend summary of cell means along one axis.
struct TrendReport {
  std::string axis;
  double spearman_rho = 0.0;       // rank correlation of axis position vs mean
  bool degenerate = false;         // constant ranks on either side; rho
                                   // reported as 0
  int increases = 0;               // consecutive-step direction counts
  int decreases = 0;
  int ties = 0;
  std::vector<double> axis_means;  // per-position means, other axes averaged
};

// Spearman rank correlation with average ranks for ties. Exposed for tests.
double spearman_rank_correlation(const std::vector<double>& x,
                                 const std::vector<double>& y,
                                 bool* degenerate = nullptr);

TrendReport trend_statistics(const SweepResult& result,
                             const std::string& axis_name);

}  // namespace jifsim
