#pragma once

#include <array>
#include <optional>

#include "diracsl2/param_space.hpp"

namespace diracsl2 {

// The kernel locus: principal points with q + 2 tau (tau - 1) = 0 (within
// tol) and tau inside [1/2 - 1/sqrt(8), 1/2 + 1/sqrt(8)], equivalently the
// arc q = 2 tau (1 - tau) with q in [1/4, 1/2].  Always false off the
// principal branch and at the limit of discrete series (where the polynomial
// equals -1/4).
bool on_arc(const ParamPoint& p, double tol = 1e-9);

struct CohomologyResult {
  ParamPoint point;
  int dimension = 0;  // 0 or 1
  // unit kernel vector in the weight-tau block basis {(f_tau,0),(0,f_{tau-1})},
  // present exactly when dimension == 1
  std::optional<std::array<double, 2>> spinor;
};

// Kernel of the localized Dirac operator: one-dimensional exactly on the
// arc, spanned by (sqrt(1 - tau), -sqrt(tau)), which annihilates the weight-
// tau invariant block there; zero everywhere else, in particular on the
// whole discrete branch where |eigenvalues| >= min(ell, sqrt(2) - 1/2).
CohomologyResult dirac_cohomology(const ParamPoint& p, double tol = 1e-9);

}  // namespace diracsl2
