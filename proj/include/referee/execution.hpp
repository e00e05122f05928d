#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace referee {

/// Selects the serial reference loop or the OpenMP loop for a kernel. Both
/// produce identical results; the serial path is what tests compare against.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, count). If iterations throw, the exception of the
/// lowest failing index is rethrown after the loop, whichever path ran.
template <typename Body>
void parallel_for(Execution exec, std::size_t count, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
#if defined(_OPENMP)
  std::exception_ptr failure;
  std::size_t failed_at = std::numeric_limits<std::size_t>::max();
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(referee_parallel_for_failure)
      {
        if (static_cast<std::size_t>(i) < failed_at) {
          failed_at = static_cast<std::size_t>(i);
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

/// Number of i in [0, count) with pred(i) true. pred must not throw.
template <typename Pred>
std::uint64_t parallel_count(Execution exec, std::uint64_t count, Pred&& pred) {
  std::uint64_t hits = 0;
  if (exec == Execution::serial) {
    for (std::uint64_t i = 0; i < count; ++i) hits += pred(i) ? 1 : 0;
    return hits;
  }
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for reduction(+ : hits) schedule(static)
  for (std::int64_t i = 0; i < total; ++i) hits += pred(static_cast<std::uint64_t>(i)) ? 1 : 0;
  return hits;
}

}  // namespace referee
