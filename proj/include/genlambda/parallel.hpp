#pragma once

// Minimal deterministic parallel helpers. Work items write to their own
// slot, so results never depend on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace genlambda {

inline std::atomic<unsigned>& thread_count_setting() {
  static std::atomic<unsigned> n{0};
  return n;
}

/// Number of worker threads used by parallel_for; 0 means hardware concurrency.
inline void set_thread_count(unsigned n) { thread_count_setting() = n; }

inline unsigned thread_count() {
  unsigned n = thread_count_setting();
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return n;
}

/// Calls fn(i) for i in [0, n). Exceptions from workers are rethrown (first one wins).
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

/// Balanced binary reduction with a fixed association order:
/// ((x0 x1)(x2 x3))((x4 x5) x6) ... Levels are evaluated in parallel.
template <class T, class Op>
T tree_reduce(std::vector<T> items, Op&& op) {
  if (items.empty()) throw std::invalid_argument("tree_reduce: empty input");
  while (items.size() > 1) {
    std::vector<T> next((items.size() + 1) / 2);
    parallel_for(items.size() / 2, [&](std::size_t i) { next[i] = op(items[2 * i], items[2 * i + 1]); });
    if (items.size() % 2 == 1) next.back() = std::move(items.back());
    items = std::move(next);
  }
  return std::move(items.front());
}

}  // namespace genlambda
