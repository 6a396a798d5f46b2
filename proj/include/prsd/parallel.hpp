#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prsd {

/// Runtime switch for the OpenMP sweeps. The serial path runs the exact
/// same per-index code, so results are identical by construction; tests
/// compare both modes and the benchmark times them.
bool parallel_enabled();
void set_parallel_enabled(bool on);
int worker_count();

namespace detail {
void rethrow_first(std::vector<std::exception_ptr>& errs);
}

/// Index-parallel loop: f(i) for i in [0, n). Each index writes only its
/// own slot of any output, so scheduling cannot change results.
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
  if (parallel_enabled() && n > 1) {
    std::vector<std::exception_ptr> errs(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
        errs[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    detail::rethrow_first(errs);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace prsd
