#include "jifsim/emit.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include "jifsim/errors.hpp"

namespace jifsim {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) value = 0.0;  // fold -0.0 into one spelling
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6f", value);
  return buffer;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
  const std::filesystem::path temp = path.string() + ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write " + temp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw IoError("failed while writing " + temp.string());
    }
  }
  std::error_code error;
  std::filesystem::rename(temp, path, error);
  if (error) {
    std::error_code ignored;
    std::filesystem::remove(temp, ignored);
    throw IoError("cannot move " + temp.string() + " to " + path.string() +
                  ": " + error.message());
  }
}

std::string render_if_matrix_csv(const ImpactFactorMatrix& matrix) {
  std::string out = "journal";
  for (int year = 1; year <= matrix.years; ++year) {
    out += ",year_" + std::to_string(year);
  }
  out += '\n';
  for (int journal = 1; journal <= matrix.num_journals; ++journal) {
    out += std::to_string(journal);
    for (int year = 1; year <= matrix.years; ++year) {
      out += ',';
      out += format_real(matrix.at(journal, year));
    }
    out += '\n';
  }
  return out;
}

std::string render_edges_csv(const SimResult& result) {
  std::string out = "citing_id,cited_id,citing_month,cited_month\n";
  for (const Edge& edge : result.ledger.edges()) {
    out += std::to_string(edge.citing_id);
    out += ',';
    out += std::to_string(edge.cited_id);
    out += ',';
    out += std::to_string(result.articles[edge.citing_id].pub_month);
    out += ',';
    out += std::to_string(result.articles[edge.cited_id].pub_month);
    out += '\n';
  }
  return out;
}

namespace {

std::string band_label(const AgeBand& band) {
  if (band.max_years < 0) return std::to_string(band.min_years) + "+";
  return std::to_string(band.min_years) + "-" + std::to_string(band.max_years);
}

}  // namespace

std::string render_ref_age_hist_csv(const SimResult& result,
                                    const std::vector<AgeBand>& bands) {
  std::string out = "journal,band,min_age_years,max_age_years,percent\n";
  for (int journal = 1; journal <= result.config.num_journals; ++journal) {
    const ReferenceAgeHistogram hist =
        reference_age_distribution(result, journal, bands);
    for (size_t b = 0; b < hist.bands.size(); ++b) {
      const AgeBand& band = hist.bands[b];
      out += std::to_string(journal);
      out += ',';
      out += band_label(band);
      out += ',';
      out += std::to_string(band.min_years);
      out += ',';
      if (band.max_years >= 0) out += std::to_string(band.max_years);
      out += ',';
      out += format_real(hist.percentages[b]);
      out += '\n';
    }
  }
  return out;
}

std::string render_sweep_csv(const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  std::string out = "cell";
  for (const SweepAxis& axis : spec.axes) {
    for (const std::string& field : axis.fields) {
      out += ',';
      out += field;
    }
  }
  out += ",mean,std,min,max,abandoned_fraction,duplicate_rate,n\n";

  const int64_t cells = grid_size(spec);
  for (int64_t cell = 0; cell < cells; ++cell) {
    out += std::to_string(cell);
    // Decompose the cell index with the first axis outermost, mirroring
    // cell_config, so rows carry the exact values that produced them.
    int64_t remainder = cell;
    std::vector<size_t> positions(spec.axes.size(), 0);
    for (size_t a = spec.axes.size(); a-- > 0;) {
      const auto length = static_cast<int64_t>(spec.axes[a].rows.size());
      positions[a] = static_cast<size_t>(remainder % length);
      remainder /= length;
    }
    for (size_t a = 0; a < spec.axes.size(); ++a) {
      for (double value : spec.axes[a].rows[positions[a]]) {
        out += ',';
        out += format_real(value);
      }
    }
    const CellStats& stats = result.cells[static_cast<size_t>(cell)];
    out += ',';
    out += format_real(stats.mean);
    out += ',';
    out += format_real(stats.stddev);
    out += ',';
    out += format_real(stats.min);
    out += ',';
    out += format_real(stats.max);
    out += ',';
    out += format_real(stats.abandoned_fraction);
    out += ',';
    out += format_real(stats.duplicate_rate);
    out += ',';
    out += std::to_string(spec.replications);
    out += '\n';
  }
  return out;
}

std::string render_calibration_csv(const CalibrationResult& result) {
  std::string out = "evaluation,stage,alpha,beta,gamma,mean_if,std_if,abs_error\n";
  for (const CalibrationEvaluation& eval : result.log) {
    out += std::to_string(eval.index);
    out += ',';
    out += eval.stage;
    out += ',';
    out += format_real(eval.params.alpha);
    out += ',';
    out += format_real(eval.params.beta);
    out += ',';
    out += format_real(eval.params.gamma);
    out += ',';
    out += format_real(eval.mean_if);
    out += ',';
    out += format_real(eval.std_if);
    out += ',';
    out += format_real(eval.abs_error);
    out += '\n';
  }
  return out;
}

std::string render_summary(const SimResult& result,
                           const ImpactFactorMatrix& matrix) {
  const SimConfig& config = result.config;
  std::string out = "run summary\n";

  out += "\nconfiguration\n";
  auto line_int = [&out](const char* name, int64_t value) {
    out += "  ";
    out += name;
    out += ": ";
    out += std::to_string(value);
    out += '\n';
  };
  auto line_real = [&out](const char* name, double value) {
    out += "  ";
    out += name;
    out += ": ";
    out += format_real(value);
    out += '\n';
  };
  line_int("num_journals", config.num_journals);
  line_int("issues_per_year", config.issues_per_year);
  line_int("articles_per_issue", config.articles_per_issue);
  line_int("years", config.years);
  line_int("review_cycle_months", config.review_cycle_months);
  line_int("avg_refs", config.avg_refs);
  line_int("warmup_months", config.warmup_months);
  line_int("max_attempts", config.max_attempts);
  line_real("kernel.alpha", config.kernel.alpha);
  line_real("kernel.beta", config.kernel.beta);
  line_real("kernel.gamma", config.kernel.gamma);
  line_real("kernel.delta", config.kernel.delta);
  line_real("quality.shape", config.quality.shape);
  line_real("quality.scale", config.quality.scale);
  line_int("quality.min_level", config.quality.min_level);
  line_int("quality.max_level", config.quality.max_level);
  line_int("seed", static_cast<int64_t>(config.seed));

  out += "\ncounts\n";
  line_int("articles", static_cast<int64_t>(result.articles.size()) - 1);
  line_int("edges", static_cast<int64_t>(result.ledger.edges().size()));
  line_int("reference_slots", result.total_slots);
  line_int("abandoned_slots", result.abandoned_slots);
  line_int("duplicate_refs", result.duplicate_refs);
  line_int("undefined_if_cells", matrix.undefined_count);
  out += "  no_citation_possible: ";
  out += result.no_citation_possible ? "yes" : "no";
  out += '\n';

  // Per-journal mean over the computed years, averaged over the values
  // exactly as if_matrix.csv carries them (six decimals), so the reported
  // number is recomputable from that file with plain spreadsheet arithmetic.
  if (config.years > matrix.convention_years) {
    const int first = matrix.convention_years + 1;
    out += "\naverage impact factor (years " + std::to_string(first) + "-" +
           std::to_string(config.years) + ")\n";
    for (int journal = 1; journal <= config.num_journals; ++journal) {
      double sum = 0.0;
      for (int year = first; year <= config.years; ++year) {
        sum += std::strtod(format_real(matrix.at(journal, year)).c_str(),
                           nullptr);
      }
      out += "  journal_" + std::to_string(journal) + ": ";
      out += format_real(sum / (config.years - first + 1));
      out += '\n';
    }
  }

  out += "\nruntime\n";
  line_real("seconds", result.runtime_seconds);
  return out;
}

std::string render_count_factor_csv(const KernelParams& params, int n_max) {
  std::string out = "n,count_factor\n";
  for (int n = 0; n <= n_max; ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_real(citation_count_factor(n, params));
    out += '\n';
  }
  return out;
}

std::string render_age_factor_csv(const KernelParams& params, int t_min) {
  std::string out = "t,age_factor\n";
  for (int t = t_min; t <= 0; ++t) {
    out += std::to_string(t);
    out += ',';
    out += format_real(age_factor(t, params));
    out += '\n';
  }
  return out;
}

namespace {

std::filesystem::path prepare_output_dir(const RunManifest& manifest) {
  const std::filesystem::path dir(manifest.output_dir);
  std::error_code error;
  std::filesystem::create_directories(dir, error);
  if (error) {
    throw IoError("cannot create output directory " + dir.string() + ": " +
                  error.message());
  }
  return dir;
}

void write_artifact(std::vector<std::filesystem::path>& written,
                    const std::filesystem::path& path,
                    const std::string& content) {
  write_file_atomic(path, content);
  written.push_back(path);
}

void append_curves(std::vector<std::filesystem::path>& written,
                   const std::filesystem::path& dir,
                   const RunManifest& manifest, const KernelParams& params) {
  write_artifact(written, dir / "count_factor.csv",
                 render_count_factor_csv(params, manifest.curves.n_max));
  write_artifact(written, dir / "age_factor.csv",
                 render_age_factor_csv(params, manifest.curves.t_min));
}

}  // namespace

std::vector<std::filesystem::path> emit_simulation(const RunManifest& manifest,
                                                   const SimResult& result) {
  const std::filesystem::path dir = prepare_output_dir(manifest);
  std::vector<std::filesystem::path> written;
  const ImpactFactorMatrix matrix = build_if_matrix(result.ledger);
  if (manifest.emit.if_matrix) {
    write_artifact(written, dir / "if_matrix.csv", render_if_matrix_csv(matrix));
  }
  if (manifest.emit.edges) {
    write_artifact(written, dir / "edges.csv", render_edges_csv(result));
  }
  if (manifest.emit.ref_age_hist) {
    write_artifact(written, dir / "ref_age_hist.csv",
                   render_ref_age_hist_csv(result, default_age_bands()));
  }
  if (manifest.emit.summary) {
    write_artifact(written, dir / "summary.txt", render_summary(result, matrix));
  }
  if (manifest.emit.curves) {
    append_curves(written, dir, manifest, result.config.kernel);
  }
  return written;
}

std::vector<std::filesystem::path> emit_sweep(const RunManifest& manifest,
                                              const SweepResult& result) {
  const std::filesystem::path dir = prepare_output_dir(manifest);
  std::vector<std::filesystem::path> written;
  write_artifact(written, dir / "sweep.csv", render_sweep_csv(result));
  if (manifest.emit.curves) {
    append_curves(written, dir, manifest, result.spec.base.kernel);
  }
  return written;
}

std::vector<std::filesystem::path> emit_calibration(
    const RunManifest& manifest, const CalibrationResult& result) {
  const std::filesystem::path dir = prepare_output_dir(manifest);
  std::vector<std::filesystem::path> written;
  write_artifact(written, dir / "calibration.csv",
                 render_calibration_csv(result));

  std::string report = "calibration summary\n";
  report += "\n  preset: " + result.preset_name + '\n';
  report += "  target_if: " + format_real(result.target_if) + '\n';
  report += "  achieved_if: " + format_real(result.achieved_if) + '\n';
  report += "  achieved_std: " + format_real(result.achieved_std) + '\n';
  report += "  alpha: " + format_real(result.best.alpha) + '\n';
  report += "  beta: " + format_real(result.best.beta) + '\n';
  report += "  gamma: " + format_real(result.best.gamma) + '\n';
  report += "  delta: " + format_real(result.best.delta) + '\n';
  report += "  evaluations: " + std::to_string(result.log.size()) + '\n';
  report += std::string("  converged: ") + (result.converged ? "yes" : "no") +
            '\n';
  if (manifest.emit.summary) {
    write_artifact(written, dir / "summary.txt", report);
  }
  return written;
}

std::vector<std::filesystem::path> emit_curves(const RunManifest& manifest,
                                               const KernelParams& params) {
  const std::filesystem::path dir = prepare_output_dir(manifest);
  std::vector<std::filesystem::path> written;
  append_curves(written, dir, manifest, params);
  return written;
}

}  // namespace jifsim
