#pragma once

#include <cstdint>
#include <string>

#include "jifsim/kernel.hpp"

namespace jifsim {

// Full description of one simulation run. Defaults are the reference
// configuration: a ten-journal discipline publishing monthly issues for
// thirteen years.
struct SimConfig {
  int num_journals = 10;        // journals in the discipline
  int issues_per_year = 12;     // issues each journal publishes per year
  int articles_per_issue = 10;  // articles in every issue
  int years = 13;               // simulated years
  int review_cycle_months = 4;  // months between submission and publication
  int avg_refs = 30;            // discipline-average outgoing references
  int warmup_months = 24;       // months before any article cites anything
  int max_attempts = 10000;     // rejection-sampling cap per reference slot
  KernelParams kernel;
  QualityDistribution quality;
  uint64_t seed = 1;            // root seed of the run's random stream
};

// Grid helpers derived from the config.
int64_t total_articles(const SimConfig& config);
int total_months(const SimConfig& config);

// Throw ConfigError (field-named) on any violated constraint.
void validate(const SimConfig& config);

// Set one numeric field by its dotted path (e.g. "review_cycle_months",
// "kernel.alpha", "quality.scale"). Integer-typed fields require an integral
// value. Unknown paths and non-integral values for integer fields raise
// ConfigError. The seed is deliberately not addressable: per-run seeds are
// derived, never swept.
void set_field(SimConfig& config, const std::string& path, double value);

// Read one numeric field by the same dotted paths.
double get_field(const SimConfig& config, const std::string& path);

}  // namespace jifsim
