#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fanoq {

// Runs fn(chunk) for chunk = 0..n_chunks-1 on `workers` threads. Chunks are
// claimed from a shared counter; callers keep determinism by writing chunk
// results into a pre-sized vector and merging in chunk order afterwards.
// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void run_chunked(std::size_t n_chunks, unsigned workers, Fn&& fn) {
  if (workers < 1) throw std::invalid_argument("worker count must be positive");
  if (n_chunks == 0) return;
  if (workers == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= n_chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned count = workers < n_chunks ? workers : static_cast<unsigned>(n_chunks);
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fanoq
