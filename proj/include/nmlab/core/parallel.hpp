#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nm {

inline void set_thread_count(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Parallel map over [0, n). Writes must be disjoint per index so the
// result is independent of scheduling.
template <typename F>
void parallel_for(size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < (long long)n; ++i) body(size_t(i));
#else
  for (size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace nm
