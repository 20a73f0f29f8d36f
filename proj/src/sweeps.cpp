#include "diracsl2/sweeps.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace diracsl2 {

int max_threads(Exec exec) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) return omp_get_max_threads();
#else
  (void)exec;
#endif
  return 1;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) throw std::invalid_argument("linspace: n must be positive");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    out[i] = i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return out;
}

}  // namespace diracsl2
