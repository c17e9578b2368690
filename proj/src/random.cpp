#include "wearnet/random.hpp"

#include <cmath>

namespace wearnet {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RandomStream RandomStream::substream(std::uint64_t master_seed, std::uint64_t k) {
  return RandomStream(mix64(master_seed ^ mix64(k + 1)));
}

std::uint64_t RandomStream::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  std::poisson_distribution<std::uint64_t> d(mean);
  return d(engine_);
}

double RandomStream::unit_gamma(int shape) {
  if (shape == 1) return -std::log(uniform_pos());
  // Sum of `shape` unit exponentials, scaled to unit mean.
  double s = 0.0;
  for (int i = 0; i < shape; ++i) s -= std::log(uniform_pos());
  return s / shape;
}

}  // namespace wearnet
