#pragma once

#include <omp.h>

#include <cstddef>
#include <exception>
#include <optional>
#include <type_traits>
#include <vector>

namespace littlewood {

/// How independent work items are executed. Serial is the reference path;
/// OpenMP must produce identical results in identical order.
enum class ExecPolicy { Serial, OpenMP };

/// results[i] = f(i) for i in [0, count).
template <class F>
auto parallel_map(std::size_t count, F&& f, ExecPolicy policy) {
  using T = std::decay_t<decltype(f(std::size_t{0}))>;
  std::vector<std::optional<T>> slots(count);
  if (policy == ExecPolicy::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) slots[i].emplace(f(i));
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(f(static_cast<std::size_t>(i)));
      } catch (...) {
#pragma omp critical(littlewood_parallel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

inline void set_thread_count(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

}  // namespace littlewood
