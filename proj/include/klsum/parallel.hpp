#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

namespace klsum {

/// Runs body(i) for i in [0, n) on `workers` threads with contiguous chunks.
/// The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::uint64_t n, unsigned workers, Body&& body) {
  if (workers <= 1 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) body(i);
    return;
  }
  const unsigned w = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  const std::uint64_t chunk = (n + w - 1) / w;
  for (unsigned t = 0; t < w; ++t) {
    threads.emplace_back([&, t] {
      try {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(n, lo + chunk);
        for (std::uint64_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

/// Pairwise (cascade) summation; result is independent of how the inputs were
/// produced.
template <typename T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() == 1) return v[0];
  if (v.size() <= 8) {
    T s = v[0];
    for (std::size_t i = 1; i < v.size(); ++i) s += v[i];
    return s;
  }
  const std::size_t mid = v.size() / 2;
  return pairwise_sum(v.subspan(0, mid)) + pairwise_sum(v.subspan(mid));
}

template <typename T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

}  // namespace klsum
