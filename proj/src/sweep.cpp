#include "jifsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "jifsim/errors.hpp"

namespace jifsim {

namespace {

void validate_axes(const SweepSpec& spec) {
  for (const SweepAxis& axis : spec.axes) {
    if (axis.fields.empty()) {
      throw ConfigError(ConfigErrorCode::kInvariant, "axes",
                        "axis lists no fields");
    }
    if (axis.rows.empty()) {
      throw ConfigError(ConfigErrorCode::kInvariant, "axes",
                        "axis lists no values");
    }
    for (const auto& row : axis.rows) {
      if (row.size() != axis.fields.size()) {
        throw ConfigError(ConfigErrorCode::kInvariant, "axes",
                          "axis row length does not match its field count");
      }
    }
  }
}

}  // namespace

int64_t grid_size(const SweepSpec& spec) {
  int64_t cells = 1;
  for (const SweepAxis& axis : spec.axes) {
    cells *= static_cast<int64_t>(axis.rows.size());
  }
  return cells;
}

SimConfig cell_config(const SweepSpec& spec, int64_t cell_index) {
  SimConfig config = spec.base;
  // Decompose the cell index with the first axis outermost (slowest-moving).
  int64_t remainder = cell_index;
  for (size_t a = spec.axes.size(); a-- > 0;) {
    const SweepAxis& axis = spec.axes[a];
    const int64_t position = remainder % static_cast<int64_t>(axis.rows.size());
    remainder /= static_cast<int64_t>(axis.rows.size());
    const std::vector<double>& row = axis.rows[static_cast<size_t>(position)];
    for (size_t f = 0; f < axis.fields.size(); ++f) {
      set_field(config, axis.fields[f], row[f]);
    }
  }
  return config;
}

uint64_t replication_seed(uint64_t seed_base, int64_t cell_index,
                          int replication, int replications) {
  const uint64_t linear = static_cast<uint64_t>(cell_index) *
                              static_cast<uint64_t>(replications) +
                          static_cast<uint64_t>(replication);
  return mix64(seed_base + linear + 1);
}

double replication_scalar(const SimResult& result) {
  const ImpactFactorMatrix matrix = build_if_matrix(result.ledger);
  double sum = 0.0;
  for (int journal = 1; journal <= matrix.num_journals; ++journal) {
    sum += average_if(matrix, journal, 3, matrix.years);
  }
  return sum / matrix.num_journals;
}

namespace {

struct RunOutcome {
  double scalar = 0.0;
  double abandoned_fraction = 0.0;
  double duplicate_rate = 0.0;
};

}  // namespace

void run_parallel_tasks(int64_t count, int parallelism,
                        const std::function<void(int64_t)>& task) {
  if (count <= 0) return;
  const int workers = static_cast<int>(
      std::max<int64_t>(1, std::min<int64_t>(parallelism, count)));
  if (workers == 1) {
    for (int64_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        task(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

namespace {

RunOutcome execute_run(const SimConfig& config) {
  const SimResult result = run_simulation(config);
  RunOutcome outcome;
  outcome.scalar = replication_scalar(result);
  outcome.abandoned_fraction =
      result.total_slots > 0
          ? static_cast<double>(result.abandoned_slots) / result.total_slots
          : 0.0;
  const int64_t edge_count =
      static_cast<int64_t>(result.ledger.edges().size());
  outcome.duplicate_rate =
      edge_count > 0 ? static_cast<double>(result.duplicate_refs) / edge_count
                     : 0.0;
  return outcome;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int parallelism) {
  if (spec.replications < 1) {
    throw ConfigError(ConfigErrorCode::kInvariant, "replications",
                      "must be >= 1");
  }
  validate_axes(spec);

  const int64_t cells = grid_size(spec);
  // Validate every cell before any simulation runs; the sweep scalar also
  // needs two convention years plus at least one computed year.
  std::vector<SimConfig> configs(static_cast<size_t>(cells));
  for (int64_t cell = 0; cell < cells; ++cell) {
    configs[static_cast<size_t>(cell)] = cell_config(spec, cell);
    validate(configs[static_cast<size_t>(cell)]);
    if (configs[static_cast<size_t>(cell)].years < 3) {
      throw ConfigError(ConfigErrorCode::kInvariant, "years",
                        "sweeps need at least 3 simulated years");
    }
  }

  const int64_t total_runs = cells * spec.replications;
  std::vector<RunOutcome> outcomes(static_cast<size_t>(total_runs));
  run_parallel_tasks(total_runs, parallelism, [&](int64_t task_index) {
    const int64_t cell = task_index / spec.replications;
    const int rep = static_cast<int>(task_index % spec.replications);
    SimConfig config = configs[static_cast<size_t>(cell)];
    config.seed = replication_seed(spec.seed_base, cell, rep, spec.replications);
    outcomes[static_cast<size_t>(task_index)] = execute_run(config);
  });

  SweepResult result;
  result.spec = spec;
  result.cells.resize(static_cast<size_t>(cells));
  for (int64_t cell = 0; cell < cells; ++cell) {
    CellStats& stats = result.cells[static_cast<size_t>(cell)];
    stats.values.reserve(spec.replications);
    double sum = 0.0;
    for (int rep = 0; rep < spec.replications; ++rep) {
      const RunOutcome& outcome =
          outcomes[static_cast<size_t>(cell * spec.replications + rep)];
      stats.values.push_back(outcome.scalar);
      sum += outcome.scalar;
      stats.abandoned_fraction += outcome.abandoned_fraction;
      stats.duplicate_rate += outcome.duplicate_rate;
    }
    stats.mean = sum / spec.replications;
    stats.abandoned_fraction /= spec.replications;
    stats.duplicate_rate /= spec.replications;
    stats.min = *std::min_element(stats.values.begin(), stats.values.end());
    stats.max = *std::max_element(stats.values.begin(), stats.values.end());
    double sq = 0.0;
    for (double v : stats.values) sq += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(sq / spec.replications);
  }
  return result;
}

double spearman_rank_correlation(const std::vector<double>& x,
                                 const std::vector<double>& y,
                                 bool* degenerate) {
  if (degenerate) *degenerate = false;
  const size_t n = x.size();
  if (n != y.size() || n < 2) {
    throw std::invalid_argument(
        "spearman_rank_correlation: need two same-length series");
  }

  // Average ranks for ties, then Pearson correlation of the rank vectors.
  auto ranks_of = [](const std::vector<double>& v) {
    const size_t n = v.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
      size_t j = i;
      while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
      const double shared = 0.5 * (static_cast<double>(i) + j) + 1.0;
      for (size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
      i = j + 1;
    }
    return ranks;
  };

  const std::vector<double> rx = ranks_of(x);
  const std::vector<double> ry = ranks_of(y);
  const double mean_rank = 0.5 * (n + 1);
  double cov = 0.0, var_x = 0.0, var_y = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = rx[i] - mean_rank;
    const double dy = ry[i] - mean_rank;
    cov += dx * dy;
    var_x += dx * dx;
    var_y += dy * dy;
  }
  if (var_x == 0.0 || var_y == 0.0) {
    if (degenerate) *degenerate = true;
    return 0.0;
  }
  return cov / std::sqrt(var_x * var_y);
}

TrendReport trend_statistics(const SweepResult& result,
                             const std::string& axis_name) {
  const SweepSpec& spec = result.spec;
  size_t axis_index = spec.axes.size();
  for (size_t a = 0; a < spec.axes.size(); ++a) {
    if (spec.axes[a].name == axis_name) {
      axis_index = a;
      break;
    }
  }
  if (axis_index == spec.axes.size()) {
    throw std::invalid_argument("trend_statistics: unknown axis " + axis_name);
  }
  const size_t positions = spec.axes[axis_index].rows.size();
  if (positions < 3) {
    throw std::invalid_argument(
        "trend_statistics: axis needs at least 3 positions");
  }

  // Stride arithmetic for the axis inside the row-major (first axis
  // outermost) cell ordering.
  int64_t inner = 1;
  for (size_t a = axis_index + 1; a < spec.axes.size(); ++a) {
    inner *= static_cast<int64_t>(spec.axes[a].rows.size());
  }
  const int64_t cells = grid_size(spec);

  TrendReport report;
  report.axis = axis_name;
  report.axis_means.assign(positions, 0.0);
  std::vector<int64_t> counts(positions, 0);
  for (int64_t cell = 0; cell < cells; ++cell) {
    const size_t position =
        static_cast<size_t>((cell / inner) % static_cast<int64_t>(positions));
    report.axis_means[position] += result.cells[static_cast<size_t>(cell)].mean;
    counts[position] += 1;
  }
  for (size_t p = 0; p < positions; ++p) {
    report.axis_means[p] /= static_cast<double>(counts[p]);
  }

  for (size_t p = 0; p + 1 < positions; ++p) {
    const double step = report.axis_means[p + 1] - report.axis_means[p];
    if (step > 0) {
      report.increases += 1;
    } else if (step < 0) {
      report.decreases += 1;
    } else {
      report.ties += 1;
    }
  }

  // Rank the axis by list position: positions are the experiment's ordered
  // settings, which keeps multi-field axes (value rows) well-defined.
  std::vector<double> axis_positions(positions);
  std::iota(axis_positions.begin(), axis_positions.end(), 0.0);
  report.spearman_rho = spearman_rank_correlation(
      axis_positions, report.axis_means, &report.degenerate);
  return report;
}

}  // namespace jifsim
