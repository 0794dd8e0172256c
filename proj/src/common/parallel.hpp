#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace airi {

/// Global worker cap honored by all internally parallelized operations
/// (dataset generation, shelf training, ensemble solves). Defaults to 1;
/// results never depend on the thread count.
inline std::atomic<int>& max_threads_slot() {
  static std::atomic<int> n{1};
  return n;
}

inline void set_max_threads(int n) { max_threads_slot().store(n < 1 ? 1 : n); }
inline int max_threads() { return max_threads_slot().load(); }

/// Runs fn(i) for i in [0, n) using up to max_threads() workers.
/// Each index is claimed exactly once; exceptions are rethrown after joining.
inline void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const int workers = std::min<int>(max_threads(), static_cast<int>(n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= n) break;
          fn(i);
        }
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace airi
