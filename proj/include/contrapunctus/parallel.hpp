#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace contrapunctus {

/// Worker count: CONTRAPUNCTUS_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("CONTRAPUNCTUS_THREADS"); env != nullptr && *env != '\0') {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, evaluates `map_range(begin, end)`
/// for each chunk on its own thread, and folds the partial results with
/// `merge` in chunk order. With an associative merge the result does not
/// depend on the worker count.
template <typename T, typename MapRange, typename Merge>
T parallel_reduce(std::uint64_t count, std::size_t workers, MapRange map_range, Merge merge) {
  workers = std::max<std::size_t>(1, std::min<std::uint64_t>(workers, std::max<std::uint64_t>(count, 1)));
  if (workers == 1) return map_range(std::uint64_t{0}, count);

  std::vector<T> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        partial[w] = map_range(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = std::move(partial[0]);
  for (std::size_t w = 1; w < workers; ++w) acc = merge(std::move(acc), std::move(partial[w]));
  return acc;
}

}  // namespace contrapunctus
