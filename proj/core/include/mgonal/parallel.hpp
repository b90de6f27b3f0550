#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace mgonal {

/// Worker count: MGONAL_THREADS if set and positive, else hardware concurrency.
std::size_t thread_count();

/// Runs task(i) for i in [0, n) on up to thread_count() threads. Results are
/// returned in index order, so output never depends on scheduling. The first
/// exception thrown by any task is rethrown after all workers join.
template <class Result>
std::vector<Result> parallel_map(std::size_t n, const std::function<Result(std::size_t)>& task);

namespace detail {
void run_indexed(std::size_t n, const std::function<void(std::size_t)>& body);
}

template <class Result>
std::vector<Result> parallel_map(std::size_t n, const std::function<Result(std::size_t)>& task) {
  std::vector<Result> out(n);
  detail::run_indexed(n, [&](std::size_t i) { out[i] = task(i); });
  return out;
}

}  // namespace mgonal
