#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace anosov {

// Deterministic parallel map: fn(i) runs exactly once for each i < n and must
// only touch state owned by slot i. Work is dealt in fixed-size chunks, so the
// set of (i -> slot) writes is identical for every worker count; reductions
// over the slots happen serially at the call site.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  if (threads < 1) threads = 1;
  constexpr std::size_t kChunk = 256;
  if (threads == 1 || n <= kChunk) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t begin = next.fetch_add(kChunk);
      if (begin >= n || failed.load()) return;
      std::size_t end = std::min(begin + kChunk, n);
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::size_t workers = std::min<std::size_t>(
      static_cast<std::size_t>(threads), (n + kChunk - 1) / kChunk);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace anosov
