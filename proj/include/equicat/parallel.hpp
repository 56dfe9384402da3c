#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace equicat::par {

/// Global switch for the OpenMP kernels. The serial reference path is the
/// semantic definition; the parallel path must produce bit-identical
/// results (tests compare them). Reductions pick the minimum failing index,
/// which is thread-count independent.
struct ExecPolicy {
  bool parallel = true;
};

ExecPolicy& exec_policy();
void set_parallel(bool on);

/// Outcome of an exhaustive sweep: pass, or the smallest failing item
/// index with its witness.
struct SweepOutcome {
  bool pass = true;
  long long fail_index = -1;
  std::string witness;
};

/// Runs `fn(i)` for every i in [0, n). `fn` must be a pure function of i
/// returning std::optional<std::string> (a witness on failure). Serially
/// the sweep stops at the first failure; in parallel every item runs and
/// the minimum failing index wins, so the two paths report identically.
template <class Fn>
SweepOutcome sweep_serial(long long n, Fn&& fn) {
  for (long long i = 0; i < n; ++i) {
    std::optional<std::string> w = fn(i);
    if (w.has_value()) return {false, i, std::move(*w)};
  }
  return {};
}

template <class Fn>
SweepOutcome sweep_parallel(long long n, Fn&& fn) {
#ifdef _OPENMP
  long long best = -1;
#pragma omp parallel
  {
    long long local_best = -1;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long i = 0; i < n; ++i) {
      if (fn(i).has_value() && (local_best < 0 || i < local_best))
        local_best = i;
    }
#pragma omp critical
    {
      if (local_best >= 0 && (best < 0 || local_best < best)) best = local_best;
    }
  }
  if (best < 0) return {};
  std::optional<std::string> w = fn(best);
  return {false, best, w.has_value() ? std::move(*w) : std::string()};
#else
  return sweep_serial(n, std::forward<Fn>(fn));
#endif
}

template <class Fn>
SweepOutcome sweep(long long n, Fn&& fn) {
  if (exec_policy().parallel) return sweep_parallel(n, std::forward<Fn>(fn));
  return sweep_serial(n, std::forward<Fn>(fn));
}

int max_threads();

}  // namespace equicat::par
