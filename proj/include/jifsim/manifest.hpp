#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "jifsim/calibrate.hpp"
#include "jifsim/sweep.hpp"

namespace jifsim {

enum class RunMode { kSimulate, kSweep, kCalibrate, kCurves };

std::string to_string(RunMode mode);

// Which artifacts a run writes.
struct EmitFlags {
  bool if_matrix = true;
  bool edges = false;  // the raw edge list is large; opt in explicitly
  bool ref_age_hist = true;
  bool summary = true;
  bool curves = false;  // kernel-curve samples alongside the run artifacts
};

// Sampling ranges of the kernel-curve dump.
struct CurveRanges {
  int n_max = 100;   // citation-count factor tabulated over n in [0, n_max]
  int t_min = -200;  // age factor tabulated over t in [t_min, 0]
};

// Everything a run needs: the mode, its configuration, and where and what
// to write. Manifests parse strictly — unknown keys, malformed values, and
// violated invariants are all rejected with the offending field named.
struct RunManifest {
  RunMode mode = RunMode::kSimulate;
  SimConfig config;            // simulate and curves; base config elsewhere
  SweepSpec sweep;             // sweep mode (sweep.base mirrors config)
  CalibrationPreset calibration;  // calibrate mode (base mirrors config)
  EmitFlags emit;
  CurveRanges curves;
  std::string output_dir = "out";
};

// Parse and fully validate a manifest file. Missing file, malformed JSON,
// and invariant violations raise ConfigError with distinct codes.
RunManifest parse_manifest_file(const std::filesystem::path& path);

// Parse from already-loaded JSON; `source` names the origin in messages.
RunManifest parse_manifest_json(const nlohmann::json& document,
                                const std::string& source);

// Serialize back to JSON. parse(serialize(m)) reproduces m exactly.
nlohmann::json to_json(const RunManifest& manifest);

}  // namespace jifsim
