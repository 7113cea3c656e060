#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace gensig {

// Runs fn(task) for task = 0..task_count-1 on `jobs` threads. Tasks share
// nothing mutable; callers merge per-task results afterwards so output is
// independent of scheduling.
inline void parallel_tasks(std::size_t task_count, int jobs,
                           const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || task_count <= 1) {
    for (std::size_t t = 0; t < task_count; ++t) fn(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= task_count) return;
      fn(t);
    }
  };
  std::vector<std::thread> pool;
  const int k = std::min<std::size_t>(jobs, task_count);
  pool.reserve(k);
  for (int i = 0; i < k; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace gensig
