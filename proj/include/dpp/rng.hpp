#pragma once

#include <cmath>
#include <cstdint>

namespace dpp {

/// Counter-based 64-bit generator (SplitMix64 output function over a keyed
/// counter). Each draw hashes (key, counter); streams derived with stream()
/// are independent of thread schedule, so parallel sampling stays
/// reproducible: stream i of a given seed always yields the same sequence.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : key_(mix(seed ^ kKeyTweak)) {}

  /// Derived generator for sub-stream `idx` (e.g. one per sample index).
  CounterRng stream(std::uint64_t idx) const {
    CounterRng r(0);
    r.key_ = mix(key_ + kGamma * (idx + 1));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix(key_ + kGamma * (++counter_)); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  /// Standard normal via Box-Muller (two uniforms per call, no state cached
  /// so that the stream layout stays position-independent).
  double next_normal() {
    double u1 = 0.0;
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kKeyTweak = 0xD1B54A32D192ED03ull;

  // SplitMix64 finalizer (Steele, Lea, Flood 2014).
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace dpp
