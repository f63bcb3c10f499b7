#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace mfc {

// Process-wide worker count for the pixel-parallel loops. Results never
// depend on this setting: every parallel loop writes disjoint outputs whose
// values do not depend on the partitioning.
int worker_threads();
void set_worker_threads(int n);

// Calls fn(lo, hi) on contiguous chunks of [begin, end), one chunk per worker.
template <typename Fn>
void parallel_chunks(int begin, int end, Fn&& fn) {
  const int n = end - begin;
  if (n <= 0) return;
  const int workers = std::min(worker_threads(), n);
  if (workers <= 1) {
    fn(begin, end);
    return;
  }
  const int chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    const int lo = begin + w * chunk;
    const int hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

// Calls fn(i) for every i in [begin, end).
template <typename Fn>
void parallel_for(int begin, int end, Fn&& fn) {
  parallel_chunks(begin, end, [&fn](int lo, int hi) {
    for (int i = lo; i < hi; ++i) fn(i);
  });
}

}  // namespace mfc
