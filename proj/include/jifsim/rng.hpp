#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace jifsim {

// Deterministic random stream backing every stochastic component.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard, so a seed reproduces the same raw stream on any conforming
// platform. The derived draws below are hand-specified rather than delegated
// to std::*_distribution (whose algorithms legitimately differ between
// standard libraries) so that simulation output is reproducible across
// toolchains as well.
//
// Draw costs in engine steps: uniform01 / uniform_index consume exactly one
// step; normal consumes exactly two; gamma_variate consumes a variable count
// (rejection method). Consumers document the order in which they draw.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // Uniform real in [0, 1): the top 53 bits of one engine step.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n - 1] for n >= 1, via floor(u * n). One step.
  int64_t uniform_index(int64_t n) {
    return static_cast<int64_t>(uniform01() * static_cast<double>(n));
  }

  // Standard normal via the Box-Muller transform (cosine branch only, two
  // engine steps per call, no cached spare — keeps the step count per call
  // fixed and the stream position predictable).
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 < kTinyUniform) u1 = kTinyUniform;  // avoid log(0)
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  // Gamma(shape, scale) via the Marsaglia-Tsang squeeze method. Shapes below
  // one are boosted through the gamma(shape + 1) identity.
  double gamma_variate(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0)) {
      throw std::invalid_argument("gamma_variate: shape and scale must be > 0");
    }
    if (shape < 1.0) {
      double boosted = gamma_variate(shape + 1.0, scale);
      double u = uniform01();
      if (u < kTinyUniform) u = kTinyUniform;
      return boosted * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = normal();
      double v = 1.0 + c * x;
      if (v <= 0.0) continue;
      v = v * v * v;
      const double u = std::max(uniform01(), kTinyUniform);
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v * scale;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
        return d * v * scale;
      }
    }
  }

  // Direct access for tests that pin the raw stream.
  uint64_t next_raw() { return eng_(); }

 private:
  static constexpr double kTinyUniform = 1e-300;
  static constexpr double kPi = 3.141592653589793238462643383279502884;

  std::mt19937_64 eng_;
};

// Stateless 64-bit finalizer (splitmix64). It is a bijection on uint64_t, so
// feeding it distinct inputs always yields distinct outputs; used to derive
// per-run seeds from a root seed plus a linear task index.
constexpr uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace jifsim
