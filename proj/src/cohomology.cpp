#include "diracsl2/cohomology.hpp"

#include <cmath>

namespace diracsl2 {

bool on_arc(const ParamPoint& p, double tol) {
  if (!p.is_principal()) return false;
  const double tau = p.tau();
  const double half_width = 1.0 / std::sqrt(8.0);
  if (tau < 0.5 - half_width || tau > 0.5 + half_width) return false;
  return std::abs(p.q() + 2.0 * tau * (tau - 1.0)) <= tol;
}

CohomologyResult dirac_cohomology(const ParamPoint& p, double tol) {
  CohomologyResult r{p, 0, std::nullopt};
  if (on_arc(p, tol)) {
    const double tau = p.tau();
    r.dimension = 1;
    r.spinor = {{std::sqrt(1.0 - tau), -std::sqrt(tau)}};
  }
  return r;
}

}  // namespace diracsl2
