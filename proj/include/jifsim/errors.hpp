#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace jifsim {

// Machine-readable reason a configuration was rejected. The CLI maps these
// onto process exit codes (missing file -> I/O, everything else -> config).
enum class ConfigErrorCode {
  kMissingFile,  // the referenced file does not exist or cannot be read
  kSyntax,       // the file exists but is not parseable
  kInvariant,    // a parsed value violates a documented constraint
};

// Configuration rejection carrying the offending field path (dotted, e.g.
// "kernel.beta"; empty when no single field is at fault).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(ConfigErrorCode code, std::string field, const std::string& message)
      : std::runtime_error(field.empty() ? message : field + ": " + message),
        code_(code),
        field_(std::move(field)) {}

  ConfigErrorCode code() const { return code_; }
  const std::string& field() const { return field_; }

 private:
  ConfigErrorCode code_;
  std::string field_;
};

// Failure to read or write a result artifact (distinct from ConfigError so
// the CLI can report a different exit code).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace jifsim
