#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace jgap {

/// Worker count used when an options struct leaves `threads` at 0.
inline unsigned default_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(begin, end, chunk_index) over `threads` contiguous chunks of
/// [0, count). Chunk boundaries depend only on (count, threads), and callers
/// reduce per-chunk results in chunk order, so results do not depend on
/// scheduling.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = default_threads();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
  if (chunks == 1) {
    fn(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> workers;
  workers.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    workers.emplace_back([&, begin, end, c] {
      try {
        fn(begin, end, c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  workers.clear();
  if (error) std::rethrow_exception(error);
}

/// Number of chunks parallel_chunks will use; size per-chunk accumulators with it.
inline std::size_t chunk_count(std::size_t count, unsigned threads) {
  if (threads == 0) threads = default_threads();
  return std::max<std::size_t>(1, std::min<std::size_t>(threads, count));
}

}  // namespace jgap
