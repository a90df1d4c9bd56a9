#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace scedeco {

// Worker count for candidate evaluation: SCEDECO_THREADS when set (capped
// to the task count), otherwise 1.
std::size_t configured_thread_count(std::size_t task_count);

// Evaluates fn(0..count-1) into an index-stable vector. Results are
// identical to the sequential loop regardless of the thread count, so
// callers may reduce them in index order without further care.
template <typename R>
std::vector<R> parallel_map(std::size_t count, const std::function<R(std::size_t)>& fn) {
  std::vector<R> results(count);
  const std::size_t workers = configured_thread_count(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += workers) results[i] = fn(i);
    });
  }
  for (auto& th : threads) th.join();
  return results;
}

}  // namespace scedeco
