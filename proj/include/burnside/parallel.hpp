#pragma once

namespace burnside::parallel {

// Runtime switch between the OpenMP kernels and their serial twins.
// Every parallel loop in the library writes disjoint, preallocated slots,
// so both paths produce bit-identical results; tests assert that.
bool enabled();
void set_enabled(bool on);
int thread_count();

template <class F>
void parallel_for(long long n, F&& fn) {
#ifdef _OPENMP
  if (enabled() && n > 1) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
#endif
  for (long long i = 0; i < n; ++i) fn(i);
}

}  // namespace burnside::parallel
