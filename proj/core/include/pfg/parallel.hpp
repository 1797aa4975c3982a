#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pfg {

/// Number of blocks parallel_blocks uses for `size` items.
inline int effective_workers(std::uint64_t size, int workers) {
  workers = std::max(1, workers);
  if (static_cast<std::uint64_t>(workers) > size) {
    workers = static_cast<int>(std::max<std::uint64_t>(size, 1));
  }
  return workers;
}

/// Splits [0, size) into `workers` contiguous blocks and runs
/// fn(shard, begin, end) for each on its own thread. Blocks are fixed by
/// (size, workers) alone. The first exception thrown by a worker is
/// rethrown after all threads join.
template <class Fn>
void parallel_blocks(std::uint64_t size, int workers, Fn&& fn) {
  workers = effective_workers(size, workers);
  auto bounds = [&](int shard) { return size * static_cast<std::uint64_t>(shard) / workers; };
  if (workers == 1) {
    fn(0, std::uint64_t{0}, size);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (int shard = 0; shard < workers; ++shard) {
    threads.emplace_back([&, shard] {
      try {
        fn(shard, bounds(shard), bounds(shard + 1));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace pfg
