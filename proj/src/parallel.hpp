#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kham::detail {

// Runs body(c) for c in [0, chunks) on `jobs` threads. Callers write into
// per-chunk slots, so results do not depend on scheduling. The first
// exception thrown by any chunk is rethrown after all workers finish.
template <typename Body>
void parallel_chunks(std::uint64_t chunks, int jobs, Body&& body) {
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) body(c);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace kham::detail
