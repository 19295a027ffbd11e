#pragma once

#include <cstdint>

#include "jifsim/rng.hpp"

namespace jifsim {

// Shape parameters of the two citation kernels. Defaults reproduce the
// reference configuration shipped with the simulator.
struct KernelParams {
  double alpha = 80.0;  // age-curve horizontal shift, in months
  double beta = 60.0;   // age-curve slope scale, in months; must be > 0
  double gamma = 36.0;  // citation-count scale; must be > 0
  double delta = 10.0;  // citation-count offset; must be >= 0
};

// Integer quality levels drawn by flooring and clamping a gamma variate.
struct QualityDistribution {
  double shape = 10.0;  // gamma shape; continuous mean = shape * scale
  double scale = 0.45;  // gamma scale
  int min_level = 1;    // clamp floor for the integer level
  int max_level = 10;   // clamp ceiling for the integer level
};

// Throw ConfigError (field-named) if the parameters violate their
// constraints. Validation happens at construction/parse time so the hot
// evaluation paths below can stay assertion-free.
void validate(const KernelParams& params);
void validate(const QualityDistribution& dist);

// Effect of an article's accumulated citation count n on its chance of being
// cited again: tanh((n + delta) / gamma). Strictly increasing in n and
// saturating at 1, so heavily cited articles gain little extra advantage.
// With delta = 0 an uncited article scores exactly 0 and can never receive
// its first citation; the positive default breaks that deadlock.
double citation_count_factor(int64_t n, const KernelParams& params);

// Effect of article age t <= 0 (publication month minus current month):
// tanh((t + alpha) / beta) / 2 + 1/2. Strictly increasing in t — recent
// articles are preferred — and vanishing as t -> -inf. alpha shifts the
// curve; beta controls how steeply attractiveness decays with age.
// Positive t is a contract violation (std::invalid_argument).
double age_factor(int64_t t, const KernelParams& params);

// Combine the three factors into one acceptance probability. Split out so
// the simulation engine's table-driven fast path multiplies in exactly the
// same order as the direct evaluation, keeping the two bit-identical.
inline double compose_cite_probability(int quality, double count_factor,
                                       double age_factor_value) {
  return (quality / 10.0) * count_factor * age_factor_value;
}

// Per-encounter acceptance probability of a citation: the quality weight
// (quality / 10), the citation-count factor, and the age factor multiplied
// together. Always < 1 for finite inputs. quality outside [1, 10] is a
// contract violation (std::invalid_argument).
double cite_probability(int quality, int64_t n, int64_t t,
                        const KernelParams& params);

// Floor a continuous quality draw to an integer level and clamp it into
// [min_level, max_level]. Exposed separately so the mapping is testable
// without a random stream.
int quality_from_continuous(double draw, const QualityDistribution& dist);

// Draw one integer quality level: a gamma(shape, scale) variate, floored and
// clamped. Consumes a variable number of engine steps (rejection sampling).
int sample_quality(Rng& rng, const QualityDistribution& dist);

}  // namespace jifsim
