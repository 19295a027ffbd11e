#include "jifsim/config.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "jifsim/errors.hpp"

namespace jifsim {

int64_t total_articles(const SimConfig& config) {
  return static_cast<int64_t>(config.num_journals) * config.issues_per_year *
         config.articles_per_issue * config.years;
}

int total_months(const SimConfig& config) {
  // Months advance once per issue round, so a year spans issues_per_year
  // months regardless of calendar naming; twelve issues give calendar months.
  return config.issues_per_year * config.years;
}

namespace {

void require(bool ok, const char* field, const char* message) {
  if (!ok) throw ConfigError(ConfigErrorCode::kInvariant, field, message);
}

}  // namespace

void validate(const SimConfig& config) {
  require(config.num_journals >= 1, "num_journals", "must be >= 1");
  require(config.issues_per_year >= 1, "issues_per_year", "must be >= 1");
  require(config.articles_per_issue >= 1, "articles_per_issue", "must be >= 1");
  require(config.years >= 1, "years", "must be >= 1");
  require(config.review_cycle_months >= 0, "review_cycle_months",
          "must be >= 0");
  require(config.avg_refs >= 1, "avg_refs", "must be >= 1");
  require(config.warmup_months >= 0, "warmup_months", "must be >= 0");
  require(config.max_attempts >= 1, "max_attempts", "must be >= 1");
  validate(config.kernel);
  validate(config.quality);
}

namespace {

struct FieldEntry {
  const char* path;
  bool is_integer;
  std::function<double(const SimConfig&)> get;
  std::function<void(SimConfig&, double)> set;
};

const std::vector<FieldEntry>& field_table() {
  static const std::vector<FieldEntry> table = {
      {"num_journals", true, [](const SimConfig& c) { return double(c.num_journals); },
       [](SimConfig& c, double v) { c.num_journals = int(v); }},
      {"issues_per_year", true, [](const SimConfig& c) { return double(c.issues_per_year); },
       [](SimConfig& c, double v) { c.issues_per_year = int(v); }},
      {"articles_per_issue", true, [](const SimConfig& c) { return double(c.articles_per_issue); },
       [](SimConfig& c, double v) { c.articles_per_issue = int(v); }},
      {"years", true, [](const SimConfig& c) { return double(c.years); },
       [](SimConfig& c, double v) { c.years = int(v); }},
      {"review_cycle_months", true, [](const SimConfig& c) { return double(c.review_cycle_months); },
       [](SimConfig& c, double v) { c.review_cycle_months = int(v); }},
      {"avg_refs", true, [](const SimConfig& c) { return double(c.avg_refs); },
       [](SimConfig& c, double v) { c.avg_refs = int(v); }},
      {"warmup_months", true, [](const SimConfig& c) { return double(c.warmup_months); },
       [](SimConfig& c, double v) { c.warmup_months = int(v); }},
      {"max_attempts", true, [](const SimConfig& c) { return double(c.max_attempts); },
       [](SimConfig& c, double v) { c.max_attempts = int(v); }},
      {"kernel.alpha", false, [](const SimConfig& c) { return c.kernel.alpha; },
       [](SimConfig& c, double v) { c.kernel.alpha = v; }},
      {"kernel.beta", false, [](const SimConfig& c) { return c.kernel.beta; },
       [](SimConfig& c, double v) { c.kernel.beta = v; }},
      {"kernel.gamma", false, [](const SimConfig& c) { return c.kernel.gamma; },
       [](SimConfig& c, double v) { c.kernel.gamma = v; }},
      {"kernel.delta", false, [](const SimConfig& c) { return c.kernel.delta; },
       [](SimConfig& c, double v) { c.kernel.delta = v; }},
      {"quality.shape", false, [](const SimConfig& c) { return c.quality.shape; },
       [](SimConfig& c, double v) { c.quality.shape = v; }},
      {"quality.scale", false, [](const SimConfig& c) { return c.quality.scale; },
       [](SimConfig& c, double v) { c.quality.scale = v; }},
      {"quality.min_level", true, [](const SimConfig& c) { return double(c.quality.min_level); },
       [](SimConfig& c, double v) { c.quality.min_level = int(v); }},
      {"quality.max_level", true, [](const SimConfig& c) { return double(c.quality.max_level); },
       [](SimConfig& c, double v) { c.quality.max_level = int(v); }},
  };
  return table;
}

const FieldEntry& find_field(const std::string& path) {
  for (const FieldEntry& entry : field_table()) {
    if (path == entry.path) return entry;
  }
  throw ConfigError(ConfigErrorCode::kInvariant, path,
                    "unknown configuration field");
}

}  // namespace

void set_field(SimConfig& config, const std::string& path, double value) {
  const FieldEntry& entry = find_field(path);
  if (!std::isfinite(value)) {
    throw ConfigError(ConfigErrorCode::kInvariant, path, "must be finite");
  }
  if (entry.is_integer && std::nearbyint(value) != value) {
    throw ConfigError(ConfigErrorCode::kInvariant, path,
                      "must be an integer value");
  }
  entry.set(config, value);
}

double get_field(const SimConfig& config, const std::string& path) {
  return find_field(path).get(config);
}

}  // namespace jifsim
