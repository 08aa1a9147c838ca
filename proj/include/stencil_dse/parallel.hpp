#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace stencil_dse {

// Worker count: hardware concurrency, capped by the STENCIL_DSE_THREADS
// environment variable when set to a positive integer.
inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("STENCIL_DSE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      n = static_cast<unsigned>(v) < n ? static_cast<unsigned>(v) : n;
    }
  }
  return n;
}

namespace detail {
inline thread_local bool inside_parallel_for = false;
}

// Evaluates fn(i) for i in [0, n) with static chunking. Results must be
// written into per-index slots by the caller's closure; any later reduction
// happens in index order, so the outcome is independent of the thread count.
// Nested calls run sequentially inside the calling worker.
template <class Fn>
void parallel_for(std::int64_t n, Fn&& fn) {
  if (n <= 0) return;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::int64_t>(worker_count(), n));
  if (workers <= 1 || detail::inside_parallel_for) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::int64_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      detail::inside_parallel_for = true;
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace stencil_dse
