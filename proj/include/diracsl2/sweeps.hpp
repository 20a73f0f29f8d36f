#pragma once

#include <cstddef>
#include <vector>

namespace diracsl2 {

enum class Exec { Serial, Parallel };

// thread count the Parallel policy would use (1 without OpenMP)
int max_threads(Exec exec);

// Order-preserving map over [0, n): each index writes its own slot, and all
// reductions happen serially on the result, so Serial and Parallel produce
// bitwise-identical output.  This is the parallel kernel shape used by the
// verification sweeps and the CLI grid emitters.
template <class T, class F>
std::vector<T> indexed_map(std::size_t n, Exec exec, F&& f) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
    std::vector<T> out(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    return out;
  }
#endif
  (void)exec;
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

// inclusive linspace with exact endpoints
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace diracsl2
