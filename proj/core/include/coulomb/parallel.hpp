#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coulomb {

// Worker count: COULOMB_THREADS if set (clamped to >= 1), else hardware
// concurrency.  Results never depend on this value, only wall time does.
inline int thread_budget() {
  if (const char* env = std::getenv("COULOMB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, n) into chunks whose boundaries depend only on n, evaluates
// `chunk(begin, end)` for each (possibly on worker threads), and folds the
// chunk results in chunk order.  The fold order is what makes the output
// identical for every thread budget.
template <class Result, class ChunkFn, class MergeFn>
Result map_reduce_chunks(std::size_t n, Result init, ChunkFn chunk, MergeFn merge,
                         int threads) {
  if (n == 0) return init;
  std::size_t num_chunks = n < 64 ? n : 64;
  std::vector<Result> results(num_chunks, init);
  std::vector<std::pair<std::size_t, std::size_t>> ranges(num_chunks);
  for (std::size_t c = 0; c < num_chunks; ++c) {
    ranges[c] = {n * c / num_chunks, n * (c + 1) / num_chunks};
  }

  if (threads <= 1 || num_chunks == 1) {
    for (std::size_t c = 0; c < num_chunks; ++c) {
      results[c] = chunk(ranges[c].first, ranges[c].second);
    }
  } else {
    std::atomic<std::size_t> nextc{0};
    auto worker = [&]() {
      while (true) {
        std::size_t c = nextc.fetch_add(1);
        if (c >= num_chunks) break;
        results[c] = chunk(ranges[c].first, ranges[c].second);
      }
    };
    std::size_t nworkers = static_cast<std::size_t>(threads);
    if (nworkers > num_chunks) nworkers = num_chunks;
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t i = 0; i < nworkers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Result acc = std::move(results[0]);
  for (std::size_t c = 1; c < num_chunks; ++c) acc = merge(std::move(acc), std::move(results[c]));
  return acc;
}

}  // namespace coulomb
