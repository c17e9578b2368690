#pragma once

#include <cstdint>
#include <random>

namespace wearnet {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Caller-owned random source. Every sampler takes one explicitly; there is
/// no global generator.
///
/// Substream k of a master seed is seeded with mix64(seed ^ mix64(k + 1)),
/// so trial k draws the same numbers no matter which worker runs it.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  static RandomStream substream(std::uint64_t master_seed, std::uint64_t k);

  /// Uniform on [0, 1).
  double uniform() { return std::generate_canonical<double, 64>(engine_); }
  /// Uniform on (0, 1].
  double uniform_pos() { return 1.0 - uniform(); }

  std::uint64_t poisson(double mean);

  /// Gamma with the given integer shape and unit mean (scale 1/shape).
  double unit_gamma(int shape);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wearnet
