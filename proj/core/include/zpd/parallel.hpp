#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace zpd {

/// Worker count from ZPD_WORKERS, falling back to the hardware concurrency.
std::size_t default_worker_count();

/// Splits [begin, end) into contiguous chunks and runs fn(worker, lo, hi) on
/// each, one thread per chunk. Runs inline when a single worker suffices.
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::size_t workers, Fn&& fn) {
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (workers == 0) workers = 1;
  if (total < workers) workers = total == 0 ? 1 : static_cast<std::size_t>(total);
  if (workers == 1) {
    fn(std::size_t{0}, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::uint64_t step = total / workers, extra = total % workers;
  std::uint64_t lo = begin;
  for (std::size_t w = 0; w < workers; ++w) {
    std::uint64_t hi = lo + step + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, lo, hi] {
      try {
        fn(w, lo, hi);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
    lo = hi;
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace zpd
