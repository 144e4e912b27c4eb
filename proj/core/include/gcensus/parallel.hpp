#pragma once

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gcensus {

// Clamps a requested worker count to [1, 4 * hardware_concurrency].
inline int resolve_workers(int requested) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int cap = hw == 0 ? 64 : static_cast<int>(4 * hw);
  if (requested < 1) {
    return 1;
  }
  return requested > cap ? cap : requested;
}

// Applies fn to every item and returns the results in input order. The
// output is a pure function of (items, fn): work is claimed dynamically but
// each result lands in its own slot, so the schedule cannot leak into the
// result. fn must be safe to call concurrently.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& fn, int workers)
    -> std::vector<decltype(fn(items[0]))> {
  using Out = decltype(fn(items[0]));
  std::vector<Out> results(items.size());
  workers = resolve_workers(workers);
  if (workers <= 1 || items.size() <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      results[i] = fn(items[i]);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) {
        return;
      }
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    threads.emplace_back(run);
  }
  for (auto& t : threads) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return results;
}

}  // namespace gcensus
