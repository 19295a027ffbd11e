#include "jifsim/manifest.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string>

#include "jifsim/errors.hpp"

namespace jifsim {

using nlohmann::json;

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::kSimulate: return "simulate";
    case RunMode::kSweep: return "sweep";
    case RunMode::kCalibrate: return "calibrate";
    case RunMode::kCurves: return "curves";
  }
  return "simulate";
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ConfigError(ConfigErrorCode::kInvariant, field, message);
}

std::string join_path(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

// Strict parsing: every object's keys must come from its documented set, so
// typos surface as errors instead of silently applied defaults.
void require_keys(const json& obj, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) fail(join_path(path, it.key()), "unknown key");
  }
}

double get_double(const json& obj, const std::string& path, const char* key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& value = obj.at(key);
  if (!value.is_number()) fail(join_path(path, key), "must be a number");
  return value.get<double>();
}

int get_int(const json& obj, const std::string& path, const char* key,
            int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& value = obj.at(key);
  if (!value.is_number_integer() && !value.is_number_unsigned()) {
    fail(join_path(path, key), "must be an integer");
  }
  return value.get<int>();
}

uint64_t get_seed(const json& obj, const std::string& path, const char* key,
                  uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& value = obj.at(key);
  if (!(value.is_number_unsigned() ||
        (value.is_number_integer() && value.get<int64_t>() >= 0))) {
    fail(join_path(path, key), "must be a nonnegative integer");
  }
  return value.get<uint64_t>();
}

bool get_bool(const json& obj, const std::string& path, const char* key,
              bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& value = obj.at(key);
  if (!value.is_boolean()) fail(join_path(path, key), "must be a boolean");
  return value.get<bool>();
}

std::string get_string(const json& obj, const std::string& path,
                       const char* key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& value = obj.at(key);
  if (!value.is_string()) fail(join_path(path, key), "must be a string");
  return value.get<std::string>();
}

std::vector<double> get_double_list(const json& value, const std::string& path) {
  if (!value.is_array() || value.empty()) fail(path, "must be a nonempty array");
  std::vector<double> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_number()) fail(path, "must contain only numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

SimConfig parse_sim_config(const json& obj, const std::string& path) {
  SimConfig config;
  require_keys(obj, path,
               {"num_journals", "issues_per_year", "articles_per_issue",
                "years", "review_cycle_months", "avg_refs", "warmup_months",
                "max_attempts", "seed", "kernel", "quality"});
  config.num_journals = get_int(obj, path, "num_journals", config.num_journals);
  config.issues_per_year =
      get_int(obj, path, "issues_per_year", config.issues_per_year);
  config.articles_per_issue =
      get_int(obj, path, "articles_per_issue", config.articles_per_issue);
  config.years = get_int(obj, path, "years", config.years);
  config.review_cycle_months =
      get_int(obj, path, "review_cycle_months", config.review_cycle_months);
  config.avg_refs = get_int(obj, path, "avg_refs", config.avg_refs);
  config.warmup_months =
      get_int(obj, path, "warmup_months", config.warmup_months);
  config.max_attempts = get_int(obj, path, "max_attempts", config.max_attempts);
  config.seed = get_seed(obj, path, "seed", config.seed);
  if (obj.contains("kernel")) {
    const std::string kernel_path = join_path(path, "kernel");
    const json& kernel = obj.at("kernel");
    require_keys(kernel, kernel_path, {"alpha", "beta", "gamma", "delta"});
    config.kernel.alpha =
        get_double(kernel, kernel_path, "alpha", config.kernel.alpha);
    config.kernel.beta =
        get_double(kernel, kernel_path, "beta", config.kernel.beta);
    config.kernel.gamma =
        get_double(kernel, kernel_path, "gamma", config.kernel.gamma);
    config.kernel.delta =
        get_double(kernel, kernel_path, "delta", config.kernel.delta);
  }
  if (obj.contains("quality")) {
    const std::string quality_path = join_path(path, "quality");
    const json& quality = obj.at("quality");
    require_keys(quality, quality_path,
                 {"shape", "scale", "min_level", "max_level"});
    config.quality.shape =
        get_double(quality, quality_path, "shape", config.quality.shape);
    config.quality.scale =
        get_double(quality, quality_path, "scale", config.quality.scale);
    config.quality.min_level =
        get_int(quality, quality_path, "min_level", config.quality.min_level);
    config.quality.max_level =
        get_int(quality, quality_path, "max_level", config.quality.max_level);
  }
  return config;
}

std::vector<SweepAxis> parse_axes(const json& value, const std::string& path) {
  if (!value.is_array() || value.empty()) fail(path, "must be a nonempty array");
  std::vector<SweepAxis> axes;
  for (size_t i = 0; i < value.size(); ++i) {
    const std::string axis_path = path + "[" + std::to_string(i) + "]";
    const json& entry = value.at(i);
    require_keys(entry, axis_path,
                 {"name", "field", "values", "fields", "rows"});
    SweepAxis axis;
    const bool single = entry.contains("field") || entry.contains("values");
    const bool multi = entry.contains("fields") || entry.contains("rows");
    if (single == multi) {
      fail(axis_path,
           "use either field/values (one field) or fields/rows (paired "
           "fields)");
    }
    if (single) {
      if (!entry.contains("field") || !entry.contains("values")) {
        fail(axis_path, "needs both field and values");
      }
      axis.fields = {get_string(entry, axis_path, "field", "")};
      for (double v :
           get_double_list(entry.at("values"), join_path(axis_path, "values"))) {
        axis.rows.push_back({v});
      }
    } else {
      if (!entry.contains("fields") || !entry.contains("rows")) {
        fail(axis_path, "needs both fields and rows");
      }
      const json& fields = entry.at("fields");
      if (!fields.is_array() || fields.empty()) {
        fail(join_path(axis_path, "fields"), "must be a nonempty array");
      }
      for (const json& field : fields) {
        if (!field.is_string()) {
          fail(join_path(axis_path, "fields"), "must contain only strings");
        }
        axis.fields.push_back(field.get<std::string>());
      }
      const json& rows = entry.at("rows");
      if (!rows.is_array() || rows.empty()) {
        fail(join_path(axis_path, "rows"), "must be a nonempty array");
      }
      for (const json& row : rows) {
        axis.rows.push_back(
            get_double_list(row, join_path(axis_path, "rows")));
        if (axis.rows.back().size() != axis.fields.size()) {
          fail(join_path(axis_path, "rows"),
               "row length must match the field count");
        }
      }
    }
    std::string default_name = axis.fields[0];
    for (size_t f = 1; f < axis.fields.size(); ++f) {
      default_name += "+" + axis.fields[f];
    }
    axis.name = get_string(entry, axis_path, "name", default_name);
    axes.push_back(std::move(axis));
  }
  return axes;
}

}  // namespace

RunManifest parse_manifest_json(const json& document,
                                const std::string& source) {
  RunManifest manifest;
  require_keys(document, "",
               {"mode", "output_dir", "emit", "config", "sweep", "calibration",
                "curves"});

  const std::string mode = get_string(document, "", "mode", "simulate");
  if (mode == "simulate") {
    manifest.mode = RunMode::kSimulate;
  } else if (mode == "sweep") {
    manifest.mode = RunMode::kSweep;
  } else if (mode == "calibrate") {
    manifest.mode = RunMode::kCalibrate;
  } else if (mode == "curves") {
    manifest.mode = RunMode::kCurves;
  } else {
    fail("mode", "must be simulate, sweep, calibrate, or curves");
  }

  manifest.output_dir =
      get_string(document, "", "output_dir", manifest.output_dir);
  if (manifest.output_dir.empty()) fail("output_dir", "must not be empty");

  if (document.contains("emit")) {
    const json& emit = document.at("emit");
    require_keys(emit, "emit",
                 {"if_matrix", "edges", "ref_age_hist", "summary", "curves"});
    manifest.emit.if_matrix =
        get_bool(emit, "emit", "if_matrix", manifest.emit.if_matrix);
    manifest.emit.edges = get_bool(emit, "emit", "edges", manifest.emit.edges);
    manifest.emit.ref_age_hist =
        get_bool(emit, "emit", "ref_age_hist", manifest.emit.ref_age_hist);
    manifest.emit.summary =
        get_bool(emit, "emit", "summary", manifest.emit.summary);
    manifest.emit.curves =
        get_bool(emit, "emit", "curves", manifest.emit.curves);
  }

  if (document.contains("config")) {
    manifest.config = parse_sim_config(document.at("config"), "config");
  }
  validate(manifest.config);

  manifest.sweep.base = manifest.config;
  if (document.contains("sweep")) {
    const json& sweep = document.at("sweep");
    require_keys(sweep, "sweep", {"axes", "replications", "seed_base"});
    if (sweep.contains("axes")) {
      manifest.sweep.axes = parse_axes(sweep.at("axes"), "sweep.axes");
    }
    manifest.sweep.replications =
        get_int(sweep, "sweep", "replications", manifest.sweep.replications);
    if (manifest.sweep.replications < 1) {
      fail("sweep.replications", "must be >= 1");
    }
    manifest.sweep.seed_base =
        get_seed(sweep, "sweep", "seed_base", manifest.sweep.seed_base);
    // Surface bad axis fields and values at parse time, not run time.
    for (int64_t cell = 0; cell < grid_size(manifest.sweep); ++cell) {
      validate(cell_config(manifest.sweep, cell));
    }
  }

  manifest.calibration.base = manifest.config;
  if (document.contains("calibration")) {
    const json& cal = document.at("calibration");
    require_keys(cal, "calibration",
                 {"name", "target_if", "budget", "replications", "tolerance",
                  "seed_base", "search"});
    manifest.calibration.name =
        get_string(cal, "calibration", "name", manifest.calibration.name);
    manifest.calibration.target_if = get_double(
        cal, "calibration", "target_if", manifest.calibration.target_if);
    manifest.calibration.budget =
        get_int(cal, "calibration", "budget", manifest.calibration.budget);
    manifest.calibration.replications = get_int(
        cal, "calibration", "replications", manifest.calibration.replications);
    manifest.calibration.tolerance = get_double(
        cal, "calibration", "tolerance", manifest.calibration.tolerance);
    manifest.calibration.seed_base = get_seed(
        cal, "calibration", "seed_base", manifest.calibration.seed_base);
    if (cal.contains("search")) {
      const json& search = cal.at("search");
      require_keys(search, "calibration.search",
                   {"alpha", "beta", "gamma", "alpha_bounds", "beta_bounds",
                    "gamma_bounds"});
      if (search.contains("alpha")) {
        manifest.calibration.alpha_grid =
            get_double_list(search.at("alpha"), "calibration.search.alpha");
      }
      if (search.contains("beta")) {
        manifest.calibration.beta_grid =
            get_double_list(search.at("beta"), "calibration.search.beta");
      }
      if (search.contains("gamma")) {
        manifest.calibration.gamma_grid =
            get_double_list(search.at("gamma"), "calibration.search.gamma");
      }
      auto bounds = [&](const char* key, double& lo, double& hi) {
        if (!search.contains(key)) return;
        const std::string bounds_path =
            join_path("calibration.search", key);
        const std::vector<double> pair =
            get_double_list(search.at(key), bounds_path);
        if (pair.size() != 2 || !(pair[0] < pair[1])) {
          fail(bounds_path, "must be [min, max] with min < max");
        }
        lo = pair[0];
        hi = pair[1];
      };
      bounds("alpha_bounds", manifest.calibration.alpha_min,
             manifest.calibration.alpha_max);
      bounds("beta_bounds", manifest.calibration.beta_min,
             manifest.calibration.beta_max);
      bounds("gamma_bounds", manifest.calibration.gamma_min,
             manifest.calibration.gamma_max);
    }
    validate(manifest.calibration);
  }

  if (document.contains("curves")) {
    const json& curves = document.at("curves");
    require_keys(curves, "curves", {"n_max", "t_min"});
    manifest.curves.n_max =
        get_int(curves, "curves", "n_max", manifest.curves.n_max);
    manifest.curves.t_min =
        get_int(curves, "curves", "t_min", manifest.curves.t_min);
    if (manifest.curves.n_max < 0) fail("curves.n_max", "must be >= 0");
    if (manifest.curves.t_min > 0) fail("curves.t_min", "must be <= 0");
  }

  // Mode-specific completeness.
  if (manifest.mode == RunMode::kSweep && manifest.sweep.axes.empty()) {
    fail("sweep.axes", "sweep mode needs at least one axis");
  }
  (void)source;
  return manifest;
}

RunManifest parse_manifest_file(const std::filesystem::path& path) {
  std::ifstream input(path);
  if (!input) {
    throw ConfigError(ConfigErrorCode::kMissingFile, "",
                      "cannot open config file: " + path.string());
  }
  json document;
  try {
    document = json::parse(input);
  } catch (const json::parse_error& error) {
    throw ConfigError(ConfigErrorCode::kSyntax, "",
                      "malformed JSON in " + path.string() + ": " +
                          error.what());
  }
  return parse_manifest_json(document, path.string());
}

json to_json(const RunManifest& manifest) {
  json document;
  document["mode"] = to_string(manifest.mode);
  document["output_dir"] = manifest.output_dir;
  document["emit"] = {{"if_matrix", manifest.emit.if_matrix},
                      {"edges", manifest.emit.edges},
                      {"ref_age_hist", manifest.emit.ref_age_hist},
                      {"summary", manifest.emit.summary},
                      {"curves", manifest.emit.curves}};
  const SimConfig& config = manifest.config;
  document["config"] = {
      {"num_journals", config.num_journals},
      {"issues_per_year", config.issues_per_year},
      {"articles_per_issue", config.articles_per_issue},
      {"years", config.years},
      {"review_cycle_months", config.review_cycle_months},
      {"avg_refs", config.avg_refs},
      {"warmup_months", config.warmup_months},
      {"max_attempts", config.max_attempts},
      {"seed", config.seed},
      {"kernel",
       {{"alpha", config.kernel.alpha},
        {"beta", config.kernel.beta},
        {"gamma", config.kernel.gamma},
        {"delta", config.kernel.delta}}},
      {"quality",
       {{"shape", config.quality.shape},
        {"scale", config.quality.scale},
        {"min_level", config.quality.min_level},
        {"max_level", config.quality.max_level}}}};

  document["sweep"] = {{"replications", manifest.sweep.replications},
                       {"seed_base", manifest.sweep.seed_base}};
  if (!manifest.sweep.axes.empty()) {
    json axes = json::array();
    for (const SweepAxis& axis : manifest.sweep.axes) {
      json rows = json::array();
      for (const auto& row : axis.rows) rows.push_back(row);
      axes.push_back(
          {{"name", axis.name}, {"fields", axis.fields}, {"rows", rows}});
    }
    document["sweep"]["axes"] = std::move(axes);
  }

  const CalibrationPreset& cal = manifest.calibration;
  document["calibration"] = {
      {"name", cal.name},
      {"target_if", cal.target_if},
      {"budget", cal.budget},
      {"replications", cal.replications},
      {"tolerance", cal.tolerance},
      {"seed_base", cal.seed_base},
      {"search",
       {{"alpha", cal.alpha_grid},
        {"beta", cal.beta_grid},
        {"gamma", cal.gamma_grid},
        {"alpha_bounds", {cal.alpha_min, cal.alpha_max}},
        {"beta_bounds", {cal.beta_min, cal.beta_max}},
        {"gamma_bounds", {cal.gamma_min, cal.gamma_max}}}}};

  document["curves"] = {{"n_max", manifest.curves.n_max},
                        {"t_min", manifest.curves.t_min}};
  return document;
}

}  // namespace jifsim
