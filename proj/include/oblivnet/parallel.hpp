#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace oblivnet {

/// Runs body(begin, end, worker) over `jobs` contiguous chunks of [0, count).
/// Chunk boundaries depend only on (count, jobs); the first exception thrown
/// by any worker is rethrown on the caller.
template <class Body>
void parallel_chunks(std::size_t count, unsigned jobs, Body&& body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count < 2) {
    body(std::size_t{0}, count, 0u);
    return;
  }
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t per = count / jobs;
  const std::size_t extra = count % jobs;
  std::size_t begin = 0;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::size_t end = begin + per + (w < extra ? 1 : 0);
    threads.emplace_back([&, begin, end, w] {
      try {
        body(begin, end, w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace oblivnet
