#pragma once

// Worker-count policy and a deterministic static-partition parallel loop.
// TENSPEC_THREADS caps the worker count; results never depend on it because
// every parallel site either writes to disjoint slots or reduces in a fixed
// order.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tenspec {

inline int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  int cap = std::min(hw, 8);
  if (const char* env = std::getenv("TENSPEC_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) cap = std::min(v, 64);
  }
  return cap;
}

/// fn(begin, end) over a static partition of [0, count).
inline void parallel_ranges(std::size_t count,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
  const int workers = worker_count();
  if (workers <= 1 || count < 4) {
    if (count > 0) fn(0, count);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    std::size_t b = static_cast<std::size_t>(w) * chunk;
    std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    threads.emplace_back(fn, b, e);
  }
  for (auto& t : threads) t.join();
}

}  // namespace tenspec
