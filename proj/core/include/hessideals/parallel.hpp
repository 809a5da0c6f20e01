// Deterministic fan-out helper for the verification sweeps: work items are
// indexed, executed on a small thread pool, and results are returned in
// input order regardless of scheduling.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hessideals {

// Resolution order: explicit request > HESSIDEALS_WORKERS > hardware.
inline int worker_count(int requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HESSIDEALS_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// fn(i) for i in [0, count); results in index order. R must be
// default-constructible. The first thrown exception is rethrown after all
// workers join.
template <typename R, typename Fn>
std::vector<R> parallel_map(int count, int workers, Fn&& fn) {
  std::vector<R> out(static_cast<size_t>(count > 0 ? count : 0));
  if (count <= 0) return out;
  workers = std::min(worker_count(workers), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          out[i] = fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace hessideals
