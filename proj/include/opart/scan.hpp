#pragma once

// Order-preserving parallel map over an index range.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace opart {

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

/// out[i] = fn(from + i) for i in [0, to - from]. Workers pull indices from a
/// shared counter; results land in their own slot, so output order never
/// depends on scheduling. The first exception (by index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t from, std::size_t to, Fn&& fn, unsigned threads = default_threads()) {
  using T = decltype(fn(from));
  if (to < from) return std::vector<T>{};
  std::size_t count = to - from + 1;
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(fn(from + i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace opart
