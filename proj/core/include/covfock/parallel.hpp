#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace covfock {

/// Worker count: COVFOCK_THREADS when set (clamped to >= 1), otherwise the
/// hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("COVFOCK_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs body(i) for i in [0, count).  Each index is processed exactly once
/// and may only write state owned by that index, so results are identical
/// for any worker count; reductions must happen afterwards in index order.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  int workers = thread_count();
  if (workers <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (static_cast<std::size_t>(workers) > count) {
    workers = static_cast<int>(count);
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace covfock
