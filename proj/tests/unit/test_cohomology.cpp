#include <cmath>

#include "diracsl2/cohomology.hpp"
#include "diracsl2/linalg.hpp"
#include "diracsl2/operators.hpp"
#include "diracsl2/param_space.hpp"
#include "diracsl2/sweeps.hpp"
#include "doctest.h"

using namespace diracsl2;

TEST_CASE("kernel on the arc") {
  const CohomologyResult mid = dirac_cohomology(ParamPoint::principal(0.5, 0.5));
  CHECK(mid.dimension == 1);
  REQUIRE(mid.spinor.has_value());
  CHECK((*mid.spinor)[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK((*mid.spinor)[1] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));

  // q = 2 tau (1 - tau) at tau = 1/4 gives exactly 3/8
  const CohomologyResult quarter = dirac_cohomology(ParamPoint::principal(0.375, 0.25));
  CHECK(quarter.dimension == 1);
  REQUIRE(quarter.spinor.has_value());
  CHECK((*quarter.spinor)[0] == std::sqrt(0.75));
  CHECK((*quarter.spinor)[1] == -0.5);
}

TEST_CASE("kernel vanishes off the arc") {
  CHECK(dirac_cohomology(ParamPoint::principal(2.0, 0.1)).dimension == 0);
  CHECK_FALSE(dirac_cohomology(ParamPoint::principal(2.0, 0.1)).spinor.has_value());
  CHECK(dirac_cohomology(ParamPoint::limit_of_discrete_series()).dimension == 0);
  CHECK_FALSE(on_arc(ParamPoint::discrete(0.0)));
  for (double q : linspace(-5.0, 0.2, 12))
    CHECK(dirac_cohomology(ParamPoint::discrete(q)).dimension == 0);
}

TEST_CASE("tau window outranks the polynomial tolerance") {
  // just outside the arc the polynomial is still tiny, but the weight leaves
  // the admissible window, so there is no kernel even at loose tolerance
  const double tau = 0.5 - 1.0 / std::sqrt(8.0) - 1e-6;
  const ParamPoint p = ParamPoint::principal(0.25, tau);
  CHECK(std::abs(p.q() + 2.0 * tau * (tau - 1.0)) < 1e-5);
  CHECK_FALSE(on_arc(p, 1e-5));
  CHECK(dirac_cohomology(p, 1e-5).dimension == 0);
}

TEST_CASE("spinor annihilates the weight-tau block") {
  for (double tau : linspace(0.2, 0.45, 10)) {
    const double q = 2.0 * tau * (1.0 - tau);
    const ParamPoint p = ParamPoint::principal(q, tau);
    const CohomologyResult r = dirac_cohomology(p);
    REQUIRE(r.dimension == 1);
    const auto& v = *r.spinor;
    CHECK(std::abs(v[0] * v[0] + v[1] * v[1] - 1.0) <= 1e-14);
    const DenseMatrix blk = invariant_block(p, tau);
    const std::vector<double> av = mat_vec(blk, {v[0], v[1]});
    CHECK(std::abs(av[0]) <= 1e-10);
    CHECK(std::abs(av[1]) <= 1e-10);
  }
}

TEST_CASE("tolerance knob widens the locus") {
  const ParamPoint p = ParamPoint::principal(0.5 + 1e-8, 0.5);
  CHECK(dirac_cohomology(p, 1e-9).dimension == 0);
  CHECK(dirac_cohomology(p, 1e-7).dimension == 1);
}
