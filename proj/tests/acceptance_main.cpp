// Acceptance suite: end-to-end checks of the published contract, one
// criterion per block, each reported as a single PASS/FAIL line. The suite
// exercises the real library through its public headers only; nothing here
// reaches into internals. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "jifsim/calibrate.hpp"
#include "jifsim/config.hpp"
#include "jifsim/emit.hpp"
#include "jifsim/engine.hpp"
#include "jifsim/kernel.hpp"
#include "jifsim/manifest.hpp"
#include "jifsim/metrics.hpp"
#include "jifsim/rng.hpp"
#include "jifsim/sweep.hpp"

using namespace jifsim;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

struct Reporter {
  int failed = 0;

  void line(int number, const char* label, bool ok, double seconds,
            const std::string& detail) {
    std::printf("%2d %s  %-68s [%7.2f s]\n", number, ok ? "PASS" : "FAIL",
                label, seconds);
    if (!ok) {
      ++failed;
      if (!detail.empty()) std::printf("        %s\n", detail.c_str());
    }
    std::fflush(stdout);
  }

  int finish(int total) const {
    std::printf("\n%d/%d criteria passed\n", total - failed, total);
    return failed == 0 ? 0 : 1;
  }
};

int worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// ---------------------------------------------------------------------------
// 1. The default configuration publishes exactly 15,600 articles.

bool check_default_grid(std::string* detail) {
  const Timer timer;
  const SimResult result = run_simulation(SimConfig{});
  const auto articles = static_cast<int64_t>(result.articles.size()) - 1;
  if (articles != 15600) {
    *detail = "expected 15600 articles, got " + std::to_string(articles);
    return false;
  }
  if (timer.seconds() >= 5.0) {
    *detail = "run took " + std::to_string(timer.seconds()) + " s (budget 5)";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 2. Impact factors match an independent brute-force recount from the raw
//    edge list and article metadata, as exact integer components.

bool check_if_oracle(std::string* detail) {
  const Timer timer;
  SimConfig config;
  config.num_journals = 2;
  config.issues_per_year = 5;
  config.articles_per_issue = 5;
  config.years = 4;  // 200 articles per instance
  config.review_cycle_months = 2;
  config.avg_refs = 15;
  config.warmup_months = 6;

  for (uint64_t seed = 1; seed <= 10; ++seed) {
    config.seed = seed;
    const SimResult result = run_simulation(config);
    const auto year_of = [&](int32_t id) {
      return year_of_month(result.articles[id].pub_month,
                           config.issues_per_year);
    };

    for (int journal = 1; journal <= config.num_journals; ++journal) {
      for (int year = 3; year <= config.years; ++year) {
        // Recount the window from scratch: citations received during the two
        // prior years by the journal's articles published in those years.
        int64_t cites = 0;
        for (const Edge& edge : result.ledger.edges()) {
          if (result.articles[edge.cited_id].journal_id != journal) continue;
          const int citing_year = year_of(edge.citing_id);
          const int cited_year = year_of(edge.cited_id);
          if (cited_year >= year - 2 && cited_year <= year - 1 &&
              citing_year >= year - 2 && citing_year <= year - 1) {
            ++cites;
          }
        }
        int64_t pubs = 0;
        for (size_t id = 1; id < result.articles.size(); ++id) {
          if (result.articles[id].journal_id == journal &&
              year_of(static_cast<int32_t>(id)) >= year - 2 &&
              year_of(static_cast<int32_t>(id)) <= year - 1) {
            ++pubs;
          }
        }

        const ImpactFactorComponents components =
            impact_factor_components(result.ledger, journal, year);
        if (components.cites != cites || components.publications != pubs) {
          *detail = "seed " + std::to_string(seed) + " journal " +
                    std::to_string(journal) + " year " + std::to_string(year) +
                    ": components " + std::to_string(components.cites) + "/" +
                    std::to_string(components.publications) +
                    " vs recount " + std::to_string(cites) + "/" +
                    std::to_string(pubs);
          return false;
        }
        const std::optional<double> value =
            impact_factor(result.ledger, journal, year);
        if (pubs == 0) {
          if (value.has_value()) {
            *detail = "empty window produced a value";
            return false;
          }
        } else if (!value.has_value() ||
                   *value != static_cast<double>(cites) /
                                 static_cast<double>(pubs)) {
          *detail = "ratio mismatch at seed " + std::to_string(seed);
          return false;
        }
      }
    }
  }
  if (timer.seconds() >= 5.0) {
    *detail = "oracle took " + std::to_string(timer.seconds()) + " s";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 3. Kernel factors match long-double reference evaluations to 1e-12 across
//    the three published parameter sets.

bool check_kernel_exactness(std::string* detail) {
  const KernelParams sets[] = {
      {100.0, 30.0, 10.0, 10.0},  // flat long-memory curve
      {15.0, 10.0, 3.0, 10.0},    // steep short-memory curve
      {80.0, 60.0, 36.0, 10.0},   // reference configuration
  };
  std::mt19937_64 inputs(20240816);
  for (const KernelParams& params : sets) {
    for (int i = 0; i < 1000; ++i) {
      const auto n = static_cast<int64_t>(inputs() % 201);
      const auto t = -static_cast<int64_t>(inputs() % 301);
      const int quality = static_cast<int>(inputs() % 10) + 1;

      const long double count_ref =
          tanhl((static_cast<long double>(n) + params.delta) / params.gamma);
      const long double age_ref =
          tanhl((static_cast<long double>(t) + params.alpha) / params.beta) /
              2.0L +
          0.5L;
      const long double composed_ref =
          (static_cast<long double>(quality) / 10.0L) * count_ref * age_ref;

      const double count = citation_count_factor(n, params);
      const double age = age_factor(t, params);
      const double composed = cite_probability(quality, n, t, params);
      if (fabsl(count - count_ref) > 1e-12 || fabsl(age - age_ref) > 1e-12 ||
          fabsl(composed - composed_ref) > 1e-12) {
        *detail = "deviation above 1e-12 at n=" + std::to_string(n) +
                  " t=" + std::to_string(t) + " q=" + std::to_string(quality) +
                  " alpha=" + std::to_string(params.alpha);
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 4. The quality sampler's pre-floor draws have the documented moments and
//    every post-processed level is an integer in [1, 10].

bool check_quality_sampler(std::string* detail) {
  const Timer timer;
  const QualityDistribution dist;
  Rng rng(424242);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double draw = rng.gamma_variate(dist.shape, dist.scale);
    sum += draw;
    sumsq += draw * draw;
    const int level = quality_from_continuous(draw, dist);
    if (level < 1 || level > 10) {
      *detail = "level " + std::to_string(level) + " outside [1, 10]";
      return false;
    }
  }
  const double mean = sum / n;
  const double variance = sumsq / n - mean * mean;
  if (std::abs(mean - 4.5) > 0.05) {
    *detail = "mean " + std::to_string(mean) + " outside 4.5 +/- 0.05";
    return false;
  }
  if (std::abs(variance - 2.025) > 0.1) {
    *detail = "variance " + std::to_string(variance) + " outside 2.025 +/- 0.1";
    return false;
  }
  if (timer.seconds() >= 2.0) {
    *detail = "sampling took " + std::to_string(timer.seconds()) + " s";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5./6. Mean average-IF strictly increases down the eight (alpha, beta) rows
//       under both published base settings.

SweepSpec shape_row_spec(int avg_refs, int cycle) {
  SweepSpec spec;
  spec.base.avg_refs = avg_refs;
  spec.base.review_cycle_months = cycle;
  spec.base.kernel.gamma = 10.0;
  spec.base.kernel.delta = 10.0;
  spec.axes = {SweepAxis{"shape",
                         {"kernel.alpha", "kernel.beta"},
                         {{90.0, 40.0},
                          {80.0, 35.0},
                          {70.0, 30.0},
                          {60.0, 25.0},
                          {50.0, 20.0},
                          {40.0, 15.0},
                          {30.0, 15.0},
                          {20.0, 15.0}}}};
  spec.replications = 20;
  spec.seed_base = 1;
  return spec;
}

bool check_shape_rows(int avg_refs, int cycle, std::string* detail) {
  const SweepResult result =
      run_sweep(shape_row_spec(avg_refs, cycle), worker_count());
  for (size_t row = 1; row < result.cells.size(); ++row) {
    if (!(result.cells[row].mean > result.cells[row - 1].mean)) {
      *detail = "row " + std::to_string(row + 1) + " mean " +
                std::to_string(result.cells[row].mean) +
                " does not exceed row " + std::to_string(row) + " mean " +
                std::to_string(result.cells[row - 1].mean);
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 7./8. One shared grid per kernel: reference volume x review cycle. The
//       review-cycle trend is read off the refs=30 slice; the volume
//       ordering off the cycle <= 12 columns.

struct TrendGrid {
  std::vector<int> refs = {10, 20, 30, 40};
  std::vector<int> cycles = {2, 4, 6, 8, 10, 12, 14, 16, 18};
  SweepResult result;

  double mean_at(size_t refs_pos, size_t cycle_pos) const {
    return result.cells[refs_pos * cycles.size() + cycle_pos].mean;
  }
};

TrendGrid run_trend_grid(double alpha, double beta, double gamma) {
  TrendGrid grid;
  SweepSpec spec;
  spec.base.kernel = KernelParams{alpha, beta, gamma, 10.0};
  SweepAxis refs_axis{"refs", {"avg_refs"}, {}};
  for (int value : grid.refs) {
    refs_axis.rows.push_back({static_cast<double>(value)});
  }
  SweepAxis cycle_axis{"cycle", {"review_cycle_months"}, {}};
  for (int value : grid.cycles) {
    cycle_axis.rows.push_back({static_cast<double>(value)});
  }
  spec.axes = {refs_axis, cycle_axis};
  spec.replications = 20;
  spec.seed_base = 1;
  grid.result = run_sweep(spec, worker_count());
  return grid;
}

bool check_cycle_trend(const TrendGrid& grid, const char* kernel_label,
                       std::string* detail) {
  // refs = 30 is the third position of the outer axis.
  std::vector<double> cycles_x, means;
  for (size_t c = 0; c < grid.cycles.size(); ++c) {
    cycles_x.push_back(static_cast<double>(grid.cycles[c]));
    means.push_back(grid.mean_at(2, c));
  }
  const double rho = spearman_rank_correlation(cycles_x, means);
  if (!(rho <= -0.8)) {
    std::ostringstream out;
    out << kernel_label << " kernel: rho " << rho << " above -0.8; means";
    for (double m : means) out << ' ' << m;
    *detail = out.str();
    return false;
  }
  return true;
}

bool check_volume_order(const TrendGrid& grid, const char* kernel_label,
                        std::string* detail) {
  for (size_t c = 0; c < grid.cycles.size() && grid.cycles[c] <= 12; ++c) {
    const double at10 = grid.mean_at(0, c);
    const double at20 = grid.mean_at(1, c);
    const double at40 = grid.mean_at(3, c);
    if (!(at40 > at20 && at20 > at10)) {
      *detail = std::string(kernel_label) + " kernel, cycle " +
                std::to_string(grid.cycles[c]) + ": means " +
                std::to_string(at10) + " / " + std::to_string(at20) + " / " +
                std::to_string(at40) + " not strictly ordered";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 9. The steeper age curve concentrates references in the youngest band.

double youngest_band_share(const SimResult& result) {
  int64_t young = 0, total = 0;
  for (const Edge& edge : result.ledger.edges()) {
    const int age =
        year_of_month(result.articles[edge.citing_id].pub_month,
                      result.config.issues_per_year) -
        year_of_month(result.articles[edge.cited_id].pub_month,
                      result.config.issues_per_year);
    if (age <= 5) ++young;
    ++total;
  }
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(young) /
                                static_cast<double>(total);
}

bool check_age_direction(std::string* detail) {
  const int pairs = 20;
  std::vector<double> steep(pairs), flat(pairs);
  run_parallel_tasks(2 * pairs, worker_count(), [&](int64_t task) {
    SimConfig config;
    const bool is_steep = task < pairs;
    config.kernel = is_steep ? KernelParams{15.0, 10.0, 10.0, 10.0}
                             : KernelParams{100.0, 30.0, 10.0, 10.0};
    config.seed = static_cast<uint64_t>(task % pairs) + 1;
    const double share = youngest_band_share(run_simulation(config));
    (is_steep ? steep : flat)[static_cast<size_t>(task % pairs)] = share;
  });

  int wins = 0;
  for (int i = 0; i < pairs; ++i) {
    if (steep[i] > flat[i]) ++wins;
  }
  if (wins < 18) {
    *detail = "steep kernel won only " + std::to_string(wins) +
              " of 20 paired seeds";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 10. Shipped journal presets calibrate to within +/-15% of their targets
//     inside the 200-evaluation budget.

bool check_calibration(const char* name, int cycle, int avg_refs,
                       double target, std::string* detail) {
  CalibrationPreset preset;
  preset.name = name;
  preset.base.review_cycle_months = cycle;
  preset.base.avg_refs = avg_refs;
  preset.target_if = target;

  const CalibrationResult result = calibrate(preset, worker_count());
  if (result.log.size() > 200) {
    *detail = std::string(name) + ": " + std::to_string(result.log.size()) +
              " evaluations exceed the budget";
    return false;
  }
  const double error = std::abs(result.achieved_if - target);
  if (!result.converged || error > 0.15 * target) {
    *detail = std::string(name) + ": achieved " +
              std::to_string(result.achieved_if) + " vs target " +
              std::to_string(target) + " after " +
              std::to_string(result.log.size()) + " evaluations";
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 11. Determinism: the same manifest writes byte-identical CSVs, and a sweep
//     is bit-identical across parallelism levels.

std::string read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool check_determinism(std::string* detail) {
  RunManifest manifest;
  manifest.config.num_journals = 3;
  manifest.config.issues_per_year = 6;
  manifest.config.articles_per_issue = 4;
  manifest.config.years = 6;
  manifest.config.review_cycle_months = 3;
  manifest.config.avg_refs = 15;
  manifest.config.warmup_months = 8;
  manifest.config.seed = 9;
  manifest.emit.edges = true;
  manifest.emit.curves = true;

  const std::filesystem::path root =
      std::filesystem::temp_directory_path() / "jifsim_acceptance_determinism";
  std::filesystem::remove_all(root);
  const char* names[] = {"if_matrix.csv", "edges.csv", "ref_age_hist.csv",
                         "count_factor.csv", "age_factor.csv"};
  for (const char* run : {"first", "second"}) {
    manifest.output_dir = (root / run).string();
    emit_simulation(manifest, run_simulation(manifest.config));
  }
  for (const char* name : names) {
    if (read_bytes(root / "first" / name) !=
        read_bytes(root / "second" / name)) {
      *detail = std::string(name) + " differs between identical runs";
      std::filesystem::remove_all(root);
      return false;
    }
  }
  std::filesystem::remove_all(root);

  SweepSpec spec;
  spec.base = manifest.config;
  spec.axes = {SweepAxis{"cycle", {"review_cycle_months"}, {{2.0}, {5.0}}}};
  spec.replications = 3;
  spec.seed_base = 77;
  const SweepResult serial = run_sweep(spec, 1);
  const SweepResult parallel = run_sweep(spec, 8);
  for (size_t cell = 0; cell < serial.cells.size(); ++cell) {
    const CellStats& a = serial.cells[cell];
    const CellStats& b = parallel.cells[cell];
    if (a.values != b.values || a.mean != b.mean || a.stddev != b.stddev ||
        a.min != b.min || a.max != b.max ||
        a.abandoned_fraction != b.abandoned_fraction ||
        a.duplicate_rate != b.duplicate_rate) {
      *detail = "cell " + std::to_string(cell) +
                " differs between parallelism 1 and 8";
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 12. Engine invariants hold over twenty seeds of the default configuration.

std::string invariant_violations(const SimResult& result) {
  const SimConfig& config = result.config;

  // Temporal sanity: citations point strictly backwards, past the gate.
  for (const Edge& edge : result.ledger.edges()) {
    if (edge.cited_id >= edge.citing_id) {
      return "edge does not point to an earlier article";
    }
    const int gap = result.articles[edge.citing_id].pub_month -
                    result.articles[edge.cited_id].pub_month;
    if (gap <= config.review_cycle_months) {
      return "edge crosses the review-cycle gate (gap " +
             std::to_string(gap) + ")";
    }
  }

  // Conservation: citation counts, edge totals, and reference lists agree.
  std::vector<int64_t> received(result.articles.size(), 0);
  for (const Edge& edge : result.ledger.edges()) {
    ++received[static_cast<size_t>(edge.cited_id)];
  }
  int64_t filled = 0;
  for (size_t id = 1; id < result.articles.size(); ++id) {
    const ArticleRecord& article = result.articles[id];
    if (article.times_cited != received[id]) {
      return "times_cited disagrees with the edge list at id " +
             std::to_string(id);
    }
    filled += static_cast<int64_t>(article.out_refs.size());

    // Budget: no article exceeds its drawn reference target.
    if (static_cast<int64_t>(article.out_refs.size()) > article.ref_target) {
      return "article " + std::to_string(id) + " exceeded its budget";
    }

    // Warm-up: early articles reference nothing.
    if (article.pub_month <= config.warmup_months &&
        !article.out_refs.empty()) {
      return "warm-up article " + std::to_string(id) + " has references";
    }
  }
  if (filled != static_cast<int64_t>(result.ledger.edges().size())) {
    return "reference lists and edge list disagree";
  }
  if (filled + result.abandoned_slots != result.total_slots) {
    return "filled + abandoned does not equal the slot total";
  }

  // Budget totals: slots come exactly from post-warm-up targets.
  int64_t expected_slots = 0;
  for (size_t id = 1; id < result.articles.size(); ++id) {
    if (result.articles[id].pub_month > config.warmup_months) {
      expected_slots += result.articles[id].ref_target;
    }
  }
  if (expected_slots != result.total_slots) {
    return "slot total disagrees with post-warm-up budgets";
  }
  return "";
}

bool check_invariants(std::string* detail) {
  const int seeds = 20;
  std::vector<std::string> violations(seeds);
  run_parallel_tasks(seeds, worker_count(), [&](int64_t task) {
    SimConfig config;
    config.seed = static_cast<uint64_t>(task) + 1;
    violations[static_cast<size_t>(task)] =
        invariant_violations(run_simulation(config));
  });
  for (int i = 0; i < seeds; ++i) {
    if (!violations[static_cast<size_t>(i)].empty()) {
      *detail = "seed " + std::to_string(i + 1) + ": " +
                violations[static_cast<size_t>(i)];
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance suite (%d workers)\n\n", worker_count());
  Reporter reporter;

  auto run = [&reporter](int number, const char* label, auto&& check) {
    const Timer timer;
    std::string detail;
    bool ok = false;
    try {
      ok = check(&detail);
    } catch (const std::exception& error) {
      detail = std::string("exception: ") + error.what();
    }
    reporter.line(number, label, ok, timer.seconds(), detail);
  };

  run(1, "default configuration publishes exactly 15,600 articles",
      check_default_grid);
  run(2, "impact factors equal a brute-force recount on 10 small instances",
      check_if_oracle);
  run(3, "kernel factors match long-double references to 1e-12",
      check_kernel_exactness);
  run(4, "quality draws have mean 4.5 and variance 2.025 within tolerance",
      check_quality_sampler);
  run(5, "means rise strictly across the 8 shape rows (refs 30, cycle 4)",
      [](std::string* detail) { return check_shape_rows(30, 4, detail); });
  run(6, "means rise strictly across the 8 shape rows (refs 20, cycle 10)",
      [](std::string* detail) { return check_shape_rows(20, 10, detail); });

  {
    const Timer grids_timer;
    const TrendGrid flat = run_trend_grid(100.0, 30.0, 10.0);
    const TrendGrid steep = run_trend_grid(15.0, 10.0, 3.0);
    const double shared = grids_timer.seconds();

    const Timer cycle_timer;
    std::string detail;
    bool ok = check_cycle_trend(flat, "flat", &detail) &&
              check_cycle_trend(steep, "steep", &detail);
    reporter.line(7, "impact factor falls with the review cycle (rho <= -0.8)",
                  ok, shared + cycle_timer.seconds(), detail);

    const Timer volume_timer;
    detail.clear();
    ok = check_volume_order(flat, "flat", &detail) &&
         check_volume_order(steep, "steep", &detail);
    reporter.line(8, "impact factor is ordered by reference volume 40 > 20 > 10",
                  ok, volume_timer.seconds(), detail);
  }

  run(9, "the steeper age curve cites younger work in >= 18/20 paired seeds",
      check_age_direction);
  run(10, "journal presets calibrate to within 15% inside 200 evaluations",
      [](std::string* detail) {
        return check_calibration("ieee-tac", 17, 30, 2.65, detail) &&
               check_calibration("laa", 10, 20, 0.94, detail);
      });
  run(11, "reruns are byte-identical and sweeps are parallelism-invariant",
      check_determinism);
  run(12, "engine invariants hold over 20 seeds of the default configuration",
      check_invariants);

  return reporter.finish(12);
}
