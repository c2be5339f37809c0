#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace slowent {

/// Worker count: `requested`, or the hardware concurrency when 0.
inline unsigned worker_count(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(begin, end, worker) over contiguous chunks of [0, n).
template <class Body>
void parallel_chunks(std::size_t n, unsigned threads, Body body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    body(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk), end = std::min(n, begin + chunk);
    pool.emplace_back([=, &body] { body(begin, end, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace slowent
