#pragma once

// Minimal fork-join helper for the per-face/per-cell loops. Workers write to
// disjoint index ranges only, so results are bitwise independent of the
// worker count. FLOATSWE_THREADS caps the pool (default 1).

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace floatswe::detail {

inline int thread_cap() {
  static const int cap = [] {
    const char* env = std::getenv("FLOATSWE_THREADS");
    if (env == nullptr) return 1;
    const int requested = std::atoi(env);
    if (requested < 1) return 1;
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return std::min(requested, std::max(hw, 1));
  }();
  return cap;
}

template <typename F>
void parallel_for(int n, F&& body) {
  const int workers = std::min(thread_cap(), std::max(n, 1));
  if (workers <= 1 || n < 2048) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace floatswe::detail
