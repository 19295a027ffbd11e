#include "jifsim/kernel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "jifsim/errors.hpp"

namespace jifsim {

void validate(const KernelParams& params) {
  if (!(params.beta > 0.0) || !std::isfinite(params.beta)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "kernel.beta",
                      "must be a finite value > 0");
  }
  if (!(params.gamma > 0.0) || !std::isfinite(params.gamma)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "kernel.gamma",
                      "must be a finite value > 0");
  }
  if (!(params.delta >= 0.0) || !std::isfinite(params.delta)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "kernel.delta",
                      "must be a finite value >= 0");
  }
  if (!std::isfinite(params.alpha)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "kernel.alpha",
                      "must be finite");
  }
}

void validate(const QualityDistribution& dist) {
  if (!(dist.shape > 0.0) || !std::isfinite(dist.shape)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "quality.shape",
                      "must be a finite value > 0");
  }
  if (!(dist.scale > 0.0) || !std::isfinite(dist.scale)) {
    throw ConfigError(ConfigErrorCode::kInvariant, "quality.scale",
                      "must be a finite value > 0");
  }
  if (dist.min_level < 1) {
    throw ConfigError(ConfigErrorCode::kInvariant, "quality.min_level",
                      "must be >= 1");
  }
  if (dist.max_level < dist.min_level) {
    throw ConfigError(ConfigErrorCode::kInvariant, "quality.max_level",
                      "must be >= quality.min_level");
  }
}

double citation_count_factor(int64_t n, const KernelParams& params) {
  if (n < 0) {
    throw std::invalid_argument("citation_count_factor: n must be >= 0");
  }
  return std::tanh((static_cast<double>(n) + params.delta) / params.gamma);
}

double age_factor(int64_t t, const KernelParams& params) {
  if (t > 0) {
    throw std::invalid_argument("age_factor: age t must be <= 0");
  }
  return 0.5 * std::tanh((static_cast<double>(t) + params.alpha) / params.beta) +
         0.5;
}

double cite_probability(int quality, int64_t n, int64_t t,
                        const KernelParams& params) {
  if (quality < 1 || quality > 10) {
    throw std::invalid_argument("cite_probability: quality must be in [1, 10]");
  }
  return compose_cite_probability(quality, citation_count_factor(n, params),
                                  age_factor(t, params));
}

int quality_from_continuous(double draw, const QualityDistribution& dist) {
  int level = static_cast<int>(std::floor(draw));
  if (level < dist.min_level) level = dist.min_level;
  if (level > dist.max_level) level = dist.max_level;
  return level;
}

int sample_quality(Rng& rng, const QualityDistribution& dist) {
  return quality_from_continuous(rng.gamma_variate(dist.shape, dist.scale),
                                 dist);
}

}  // namespace jifsim
