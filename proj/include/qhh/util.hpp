#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace qhh {

// Deterministic parallel loop: results must land in pre-sized slots keyed by
// the index. threads <= 1 runs inline.
inline void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace qhh
