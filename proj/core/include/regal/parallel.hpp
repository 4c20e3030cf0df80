#pragma once
// Deterministic fork-join helper. Work items are indexed; each item writes
// only to its own result slot, so results are identical for any worker count.

#include <cstddef>
#include <stdexcept>
#include <thread>
#include <vector>

namespace regal {

template <typename F>
void parallel_for(std::size_t count, int workers, F&& body) {
  if (workers < 1) throw std::invalid_argument("parallel_for: workers must be >= 1");
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::size_t w = std::min<std::size_t>(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(w);
  std::size_t chunk = (count + w - 1) / w;
  for (std::size_t t = 0; t < w; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace regal
