#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace ldcc {

// Named sub-stream tags. Every random quantity in the project is drawn from
// an Rng seeded as derive(master_seed, stream, index), so reruns with the
// same master seed are bit-reproducible regardless of worker count or
// scheduling.
namespace stream {
inline constexpr std::uint64_t kCodeGen = 1;    // `gen` command
inline constexpr std::uint64_t kTrial = 2;      // one Monte Carlo trial
inline constexpr std::uint64_t kBootstrap = 3;  // fit bootstrap resampling
inline constexpr std::uint64_t kSynthetic = 4;  // synthetic data in tests
inline constexpr std::uint64_t kPoint = 5;      // one sweep/experiment point
}  // namespace stream

/// Deterministic PRNG wrapper. The engine is std::mt19937_64 (whose raw
/// output sequence is pinned by the standard); all distributions are
/// implemented here rather than with std:: distribution adaptors, which are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Unbiased integer in [0, bound) via rejection sampling. bound > 0.
  std::uint32_t uniform_below(std::uint32_t bound) {
    const std::uint64_t span = bound;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return static_cast<std::uint32_t>(x % span);
  }

  /// Uniform double in [0, 1) with 53 significant bits.
  double uniform_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (used only for synthetic test data).
  double normal() {
    double u1 = uniform_double();
    while (u1 == 0.0) u1 = uniform_double();
    const double u2 = uniform_double();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  /// splitmix64 finalizer; used as the seed-derivation hash.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  /// Sub-stream seed: chained splitmix64 over (seed, stream, index).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t index) {
    return mix(mix(mix(seed) ^ stream) ^ index);
  }

  static Rng child(std::uint64_t seed, std::uint64_t stream,
                   std::uint64_t index) {
    return Rng(derive(seed, stream, index));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ldcc
