#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace fibcat {

/// Runs fn(0), ..., fn(n-1), striping the indices over the given number of
/// worker threads. Callers must make fn(i) touch only per-index state (e.g.
/// results[i]) so that the outcome is independent of the worker count; the
/// serial path (workers <= 1) runs in index order. The first exception, by
/// worker index, is rethrown after all workers finish.
template <typename Fn>
void parallel_for(int n, int workers, Fn&& fn) {
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  const int w = std::min(workers, n);
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (int t = 0; t < w; ++t)
    threads.emplace_back([&fn, &errors, t, w, n] {
      try {
        for (int i = t; i < n; i += w) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace fibcat
