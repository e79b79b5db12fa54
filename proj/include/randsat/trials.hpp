#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace randsat {

/// 0 means one thread per hardware core.
inline unsigned resolve_threads(unsigned requested, std::uint64_t work) {
  unsigned threads = requested == 0 ? std::thread::hardware_concurrency()
                                    : requested;
  threads = std::max(threads, 1u);
  const std::uint64_t cap = std::max<std::uint64_t>(work, 1);
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, cap));
}

namespace detail {

inline constexpr std::uint64_t kTrialChunk = 512;

template <class Body>
void run_pool(unsigned threads, Body body) {
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        try {
          body();
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error)
            error = std::current_exception();
        }
      });
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace detail

/// Runs trials 0..count-1 and counts successes.
///
/// `make_worker()` is called once per thread and must return a callable
/// `bool(std::uint64_t trial)`. The total is independent of the thread count
/// as long as each trial is a pure function of its index.
template <class MakeWorker>
std::uint64_t count_successes(std::uint64_t count, unsigned threads,
                              MakeWorker make_worker) {
  threads = resolve_threads(threads, count / detail::kTrialChunk + 1);
  if (threads == 1) {
    auto worker = make_worker();
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < count; ++i)
      successes += worker(i) ? 1 : 0;
    return successes;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> total{0};
  detail::run_pool(threads, [&] {
    auto worker = make_worker();
    std::uint64_t local = 0;
    for (;;) {
      const std::uint64_t start = next.fetch_add(detail::kTrialChunk);
      if (start >= count)
        break;
      const std::uint64_t end = std::min(count, start + detail::kTrialChunk);
      for (std::uint64_t i = start; i < end; ++i)
        local += worker(i) ? 1 : 0;
    }
    total += local;
  });
  return total;
}

/// Lowest trial index in 0..count-1 whose worker call succeeds.
///
/// Every index below the returned one is evaluated, so the answer does not
/// depend on scheduling.
template <class MakeWorker>
std::optional<std::uint64_t> first_success(std::uint64_t count,
                                           unsigned threads,
                                           MakeWorker make_worker) {
  threads = resolve_threads(threads, count / detail::kTrialChunk + 1);
  if (threads == 1) {
    auto worker = make_worker();
    for (std::uint64_t i = 0; i < count; ++i)
      if (worker(i))
        return i;
    return std::nullopt;
  }
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{count};
  detail::run_pool(threads, [&] {
    auto worker = make_worker();
    for (;;) {
      const std::uint64_t start = next.fetch_add(detail::kTrialChunk);
      if (start >= best.load())
        break;
      const std::uint64_t end = std::min(count, start + detail::kTrialChunk);
      for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
        if (!worker(i))
          continue;
        std::uint64_t seen = best.load();
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
        break;
      }
    }
  });
  if (best.load() < count)
    return best.load();
  return std::nullopt;
}

} // namespace randsat
