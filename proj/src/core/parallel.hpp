#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <future>
#include <vector>

namespace kmchar {

// Runs fn(i) for i in [0, count) on up to `jobs` threads. Each index is
// handled exactly once; the first exception is rethrown after all threads
// finish.
template <class Fn>
void parallel_for(int count, int jobs, Fn&& fn) {
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) fn(i);
  };
  const int threads = std::clamp(jobs, 1, std::max(count, 1));
  std::vector<std::future<void>> pool;
  for (int t = 1; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  std::exception_ptr err;
  try {
    worker();
  } catch (...) {
    err = std::current_exception();
    next.store(count);
  }
  for (auto& f : pool) {
    try {
      f.get();
    } catch (...) {
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace kmchar
