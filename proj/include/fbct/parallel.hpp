#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fbct {

inline unsigned hardware_threads() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : hc;
}

/// Splits [0, count) into contiguous chunks, runs `body(begin, end)` for
/// each on its own thread, and folds the partial results with `merge` in
/// chunk order. The fold order is fixed, so the result never depends on
/// scheduling.
template <class Partial, class Body, class Merge>
Partial partition_reduce(std::uint64_t count, unsigned threads, Body&& body, Merge&& merge) {
  threads = std::max(1u, threads);
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1));
  if (chunks == 1) return body(std::uint64_t{0}, count);

  std::vector<Partial> partials(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::uint64_t k = 0; k < chunks; ++k) {
      const std::uint64_t begin = count * k / chunks;
      const std::uint64_t end = count * (k + 1) / chunks;
      workers.emplace_back([&, k, begin, end] {
        try {
          partials[k] = body(begin, end);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Partial acc = std::move(partials[0]);
  for (std::uint64_t k = 1; k < chunks; ++k) merge(acc, partials[k]);
  return acc;
}

}  // namespace fbct
