#include "burnside/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace burnside::parallel {

namespace {
std::atomic<bool> g_enabled{true};
}

bool enabled() { return g_enabled.load(); }
void set_enabled(bool on) { g_enabled.store(on); }

int thread_count() {
#ifdef _OPENMP
  return enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace burnside::parallel
