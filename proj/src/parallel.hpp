#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tourn::detail {

/// Runs body(i) for i in [0, count) over `jobs` threads, each taking one
/// contiguous slice. Results must be written to per-index slots so the
/// caller's merge order does not depend on scheduling. The first exception
/// thrown by any worker is rethrown here.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body&& body) {
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const std::size_t slice = (count + workers - 1) / workers;
    for (std::size_t begin = 0; begin < count; begin += slice) {
      const std::size_t end = std::min(count, begin + slice);
      pool.emplace_back([&, begin, end] {
        try {
          for (std::size_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tourn::detail
