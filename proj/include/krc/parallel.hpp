#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace krc {

/// Hardware concurrency when `jobs` <= 0.
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

/// Splits `items` into contiguous chunks, folds each chunk into its own
/// accumulator with `visit(acc, item)` and merges them in chunk order.
template <typename Acc, typename Item, typename Visit, typename Merge>
Acc parallel_fold(const std::vector<Item>& items, int jobs, Acc init, Visit visit, Merge merge) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), std::max<std::size_t>(1, items.size()));
  if (workers <= 1) {
    for (const auto& x : items) visit(init, x);
    return init;
  }
  std::vector<Acc> partial(workers, init);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (items.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(items.size(), lo + chunk);
      try {
        for (std::size_t t = lo; t < hi; ++t) visit(partial[w], items[t]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc out = init;
  for (auto& p : partial) merge(out, p);
  return out;
}

}  // namespace krc
