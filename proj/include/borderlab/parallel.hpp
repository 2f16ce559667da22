#pragma once
#include <cstdlib>
#include <functional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace borderlab {

// Effective worker count: explicit request > BORDERLAB_WORKERS env > OpenMP default.
inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BORDERLAB_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Serial reference loop. Kept alongside the OpenMP kernel so tests can assert
// bit-identical results between the two and benchmarks can compare them.
template <typename Fn>
void serial_for(long n, Fn&& fn) {
  for (long i = 0; i < n; ++i) fn(i);
}

// Data-parallel loop over independent indices. The body must only write to
// per-index slots; reductions happen afterwards with pairwise_sum so results
// do not depend on the worker count.
template <typename Fn>
void parallel_for(long n, int workers, Fn&& fn) {
  const int w = resolve_workers(workers);
  if (w <= 1 || n < 2) {
    serial_for(n, fn);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(w)
  for (long i = 0; i < n; ++i) fn(i);
#else
  serial_for(n, fn);
#endif
}

// Order-independent summation: fixed pairwise tree, identical for any worker
// count and more accurate than a running sum on large ensembles.
inline double pairwise_sum(const double* data, long n) {
  if (n <= 8) {
    double s = 0.0;
    for (long i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const long half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), static_cast<long>(v.size()));
}

}  // namespace borderlab
