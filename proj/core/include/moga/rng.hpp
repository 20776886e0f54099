#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace moga {

/// Seeded random source used everywhere randomness is needed.
///
/// Wraps std::mt19937_64 but derives uniform/normal variates with explicit
/// arithmetic instead of the standard distributions, whose output sequences
/// are implementation-defined.  Two runs built with different standard
/// libraries therefore still draw identical streams for the same seed, which
/// is what makes run outputs byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).  Uses the top 53 bits of one engine draw.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform index in [0, n).  n must be positive.  The modulo bias is below
  /// 2^-50 for any population size this library handles.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % static_cast<std::uint64_t>(n));
  }

  /// Standard normal variate (Box-Muller, both draws consumed every call).
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();  // log(0) guard
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace moga
