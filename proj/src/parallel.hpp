#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace coopnoma::detail {

// Fixed chunk size shared by all engines: results are reduced per chunk in
// index order, which keeps float accumulation order (and therefore output
// bytes) independent of how many workers execute the chunks.
inline constexpr long kChunkSize = 16384;

inline long chunk_count(long total, long chunk = kChunkSize) {
  return (total + chunk - 1) / chunk;
}

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Invokes fn(chunk_index, begin, end) for every chunk of [0, total). fn must
// confine its writes to state owned by chunk_index.
inline void parallel_chunks(long total, int threads,
                            const std::function<void(long, long, long)>& fn) {
  long chunks = chunk_count(total);
  int workers = std::min<long>(resolve_threads(threads), chunks);
  if (workers <= 1) {
    for (long c = 0; c < chunks; ++c) {
      long begin = c * kChunkSize;
      long end = std::min(total, begin + kChunkSize);
      fn(c, begin, end);
    }
    return;
  }
  std::atomic<long> next{0};
  auto worker = [&] {
    for (;;) {
      long c = next.fetch_add(1);
      if (c >= chunks) return;
      long begin = c * kChunkSize;
      long end = std::min(total, begin + kChunkSize);
      fn(c, begin, end);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace coopnoma::detail
