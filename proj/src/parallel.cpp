#include "prsd/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace prsd {

namespace {
std::atomic<bool> g_enabled{[] {
  const char* env = std::getenv("PRSD_SERIAL");
  return !(env != nullptr && env[0] == '1');
}()};
}

bool parallel_enabled() { return g_enabled.load(); }
void set_parallel_enabled(bool on) { g_enabled.store(on); }

int worker_count() {
#ifdef _OPENMP
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

namespace detail {
void rethrow_first(std::vector<std::exception_ptr>& errs) {
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}
}  // namespace detail

}  // namespace prsd
