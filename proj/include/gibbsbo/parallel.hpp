#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace gibbsbo {

/// Worker cap: GIBBSBO_THREADS if set and positive, else hardware threads.
std::size_t worker_count();

/// Samples per reduction chunk. Fixed so that chunk boundaries, and hence
/// floating-point results, never depend on the number of workers.
inline constexpr std::size_t kChunkSize = 2048;

/// Runs fn(begin, end) over [0, count) split into fixed chunks and returns
/// the per-chunk results in chunk order.
template <class Fn>
auto parallel_chunks(std::size_t count, Fn&& fn, std::size_t chunk = kChunkSize)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t, std::size_t>;
  const std::size_t n_chunks = (count + chunk - 1) / chunk;
  std::vector<Result> results(n_chunks);
  if (n_chunks == 0) return results;

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        const std::size_t begin = c * chunk;
        results[c] = fn(begin, std::min(count, begin + chunk));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };

  const std::size_t n_workers = std::min(worker_count(), n_chunks);
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

/// Element-wise map over [0, count) with the same scheduling guarantees.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> out(count);
  parallel_chunks(count, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    return 0;
  }, 64);
  return out;
}

}  // namespace gibbsbo
