#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "jifsim/calibrate.hpp"
#include "jifsim/engine.hpp"
#include "jifsim/manifest.hpp"
#include "jifsim/metrics.hpp"
#include "jifsim/sweep.hpp"

namespace jifsim {

// Fixed-point text (six decimals) for every real number that reaches a CSV
// or the summary, so reruns compare byte-for-byte. NaN renders as "nan" on
// every platform.
std::string format_real(double value);

// Write `content` through a sibling temp file and rename it into place: a
// failed write never leaves a partial artifact at the final path. Throws
// IoError with the path on any failure.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

// Renderers build complete file bodies in memory (comma separators, LF line
// endings, UTF-8, one header row naming the columns) so tests can check the
// exact bytes without touching disk.

// journal,year_1..year_N - one row per journal, convention years included.
std::string render_if_matrix_csv(const ImpactFactorMatrix& matrix);

// citing_id,cited_id,citing_month,cited_month - one row per recorded edge.
std::string render_edges_csv(const SimResult& result);

// journal,band,min_age_years,max_age_years,percent - the age distribution of
// each journal's outgoing references; max_age_years is empty for the
// open-ended final band.
std::string render_ref_age_hist_csv(const SimResult& result,
                                    const std::vector<AgeBand>& bands);

// cell,<one column per swept field>,mean,std,min,max,abandoned_fraction,
// duplicate_rate,n - one row per grid cell, grid order.
std::string render_sweep_csv(const SweepResult& result);

// evaluation,stage,alpha,beta,gamma,mean_if,std_if,abs_error - the full
// evaluation log, in evaluation order.
std::string render_calibration_csv(const CalibrationResult& result);

// Human-readable run report: config echo, count diagnostics, per-journal
// average impact factor over the computed years, runtime. The only artifact
// that carries the runtime, so the CSVs stay rerun-identical.
std::string render_summary(const SimResult& result,
                           const ImpactFactorMatrix& matrix);

// n,count_factor for n in 0..n_max at unit steps.
std::string render_count_factor_csv(const KernelParams& params, int n_max);

// t,age_factor for t in t_min..0 at unit steps.
std::string render_age_factor_csv(const KernelParams& params, int t_min);

// Orchestrators: create the manifest's output directory and write the
// artifacts its emit flags request. Each returns the paths written.
std::vector<std::filesystem::path> emit_simulation(const RunManifest& manifest,
                                                   const SimResult& result);
std::vector<std::filesystem::path> emit_sweep(const RunManifest& manifest,
                                              const SweepResult& result);
std::vector<std::filesystem::path> emit_calibration(
    const RunManifest& manifest, const CalibrationResult& result);
std::vector<std::filesystem::path> emit_curves(const RunManifest& manifest,
                                               const KernelParams& params);

}  // namespace jifsim
