#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace penney {

inline unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs f(shard) for shard in [0, n_shards) on a worker pool and returns
// the per-shard results in shard order, so any fold over them is
// deterministic regardless of the worker count.
template <class R, class F>
std::vector<R> parallel_shards(std::size_t n_shards, unsigned threads, F f) {
  std::vector<R> results(n_shards);
  unsigned t = effective_threads(threads);
  if (t <= 1 || n_shards <= 1) {
    for (std::size_t i = 0; i < n_shards; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (unsigned k = 0; k < t; ++k) {
    pool.emplace_back([&] {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= n_shards || failed.load()) break;
        try {
          results[i] = f(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          break;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace penney
