#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace wearnet::detail {

/// out[k] = fn(k) for k in [0, n), spread over OpenMP threads. Each slot is
/// written by exactly one iteration, so the result does not depend on the
/// thread count. The first exception thrown by any iteration is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  std::exception_ptr failure;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = fn(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(wearnet_parallel_map_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

template <class T, class Fn>
std::vector<T> serial_map(std::size_t n, Fn&& fn) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(fn(k));
  return out;
}

}  // namespace wearnet::detail
