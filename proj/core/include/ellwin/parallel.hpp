#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace ellwin {

/// Applies f to every element on up to `jobs` threads; results keep input
/// order. The first exception thrown by f is rethrown after all workers stop.
template <class T, class F>
auto parallel_map(const std::vector<T> &items, int jobs, F f) -> std::vector<std::invoke_result_t<F &, const T &>> {
  using R = std::invoke_result_t<F &, const T &>;
  std::vector<R> out(items.size());
  const std::size_t workers =
      std::min<std::size_t>(items.size(), static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = f(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i] = f(items[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work);
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

inline int hardware_jobs() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

} // namespace ellwin
