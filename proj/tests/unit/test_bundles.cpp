#include <cmath>
#include <stdexcept>
#include <vector>

#include "diracsl2/bundles.hpp"
#include "diracsl2/errors.hpp"
#include "diracsl2/linalg.hpp"
#include "diracsl2/operators.hpp"
#include "diracsl2/param_space.hpp"
#include "diracsl2/sweeps.hpp"
#include "doctest.h"

using namespace diracsl2;

TEST_CASE("bundle weights") {
  CHECK(bundle_weight(1, 0.25) == 1.5);
  CHECK(bundle_weight(1, 0.0) == 2.0);
  CHECK(bundle_weight(-1, 0.0) == -1.0);
  CHECK_THROWS_AS(bundle_weight(0, 1.0), InadmissibleIndex);
}

TEST_CASE("discriminant closed form") {
  CHECK(discriminant(1, 0.25) == 2.0);
  CHECK(discriminant(-1, 0.25) == 2.0);
  CHECK(discriminant(0, 0.5) == 0.25);
  CHECK(discriminant(2, -0.75) == 17.0);
  // continuous across the seam, but with a sqrt cusp: the gap at distance
  // delta is dominated by 4|k| sqrt(delta)
  CHECK(std::abs(discriminant(3, 0.25 - 1e-12) - discriminant(3, 0.25)) <= 2e-5);
}

TEST_CASE("distinguished curves") {
  CHECK(omega(0.0) == 1.0);
  CHECK(omega(0.5) == 0.0);
  CHECK(omega(1.0) == 0.5 - std::sqrt(0.75));
  CHECK(omega(0.25) == 0.5);
  CHECK(epsilon(0.25) == 0.5);

  const std::vector<double> qs = linspace(-3.0, 3.0, 31);
  for (std::size_t i = 1; i < qs.size(); ++i) CHECK(omega(qs[i]) < omega(qs[i - 1]));
  for (double q : qs) {
    CHECK(epsilon(q) >= 0.5);
    if (q > 0.25) CHECK(omega(q) < epsilon(q));
    if (q < 0.25) CHECK(omega(q) == epsilon(q));  // shared extremal eigenvalue
  }

  // k = 0 is served by the distinguished pair, not the lambda formula
  CHECK(0.5 - std::sqrt(discriminant(0, 0.0)) == 0.0);
  CHECK(omega(0.0) == 1.0);
}

TEST_CASE("lambda curves never approach zero") {
  CHECK(lambda_minus(1, 0.25) == 0.5 - std::sqrt(2.0));
  CHECK(lambda_plus(1, 0.25) == 0.5 + std::sqrt(2.0));
  for (int k : {1, -1, 2, -2, 5}) {
    for (double q : linspace(-10.0, 10.0, 21)) {
      CHECK(lambda_plus(k, q) >= 0.5 + std::sqrt(2.0) - 1e-12);
      CHECK(lambda_minus(k, q) <= 0.5 - std::sqrt(2.0) + 1e-12);
    }
  }
}

TEST_CASE("bundle vectors") {
  const EigenCurveSample ext = bundle_vector({0, Branch::Minus}, 0.1);
  CHECK(ext.fibre == EigenCurveSample::Fibre::ExtremalPair);
  CHECK(ext.eigenvalue == omega(0.1));
  CHECK(ext.m == 0.5 + std::sqrt(0.15));
  CHECK(ext.vector[0] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(ext.vector[1] == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));

  const EigenCurveSample blk = bundle_vector({0, Branch::Minus}, 0.5);
  CHECK(blk.fibre == EigenCurveSample::Fibre::Block);
  CHECK(blk.m == 0.5);

  const EigenCurveSample s = bundle_vector({1, Branch::Minus}, 2.0);
  CHECK(s.m == 1.5);
  CHECK(s.fibre == EigenCurveSample::Fibre::Block);
  const DenseMatrix a = invariant_block(ParamPoint::principal(2.0, 0.5), 1.5);
  const std::vector<double> av = mat_vec(a, {s.vector[0], s.vector[1]});
  CHECK(std::abs(av[0] - s.eigenvalue * s.vector[0]) <= 1e-12);
  CHECK(std::abs(av[1] - s.eigenvalue * s.vector[1]) <= 1e-12);
  CHECK(std::abs(s.vector[0] * s.vector[0] + s.vector[1] * s.vector[1] - 1.0) <= 1e-14);
}

TEST_CASE("tracking crosses the gluing point continuously") {
  const std::vector<EigenCurveSample> path = track_bundle({1, Branch::Minus}, -3.0, 3.0, 61);
  REQUIRE(path.size() == 61);
  CHECK(path.front().q == -3.0);
  CHECK(path.back().q == 3.0);
  for (std::size_t i = 1; i < path.size(); ++i) {
    const double dot = path[i].vector[0] * path[i - 1].vector[0] +
                       path[i].vector[1] * path[i - 1].vector[1];
    CHECK(dot >= 0.999);
    CHECK(std::abs(path[i].eigenvalue - path[i - 1].eigenvalue) <= 0.5);
  }
}

TEST_CASE("spectral flow of the distinguished lower curve") {
  const SpectralFlowReport r = spectral_flow([](double q) { return omega(q); }, -50.0, 50.0, 1001);
  CHECK(r.net_flow == -1);
  REQUIRE(r.crossings.size() == 1);
  CHECK(std::abs(r.crossings[0].q - 0.5) <= 1e-9);
  CHECK(r.crossings[0].direction == -1);

  const SpectralFlowReport e =
      spectral_flow([](double q) { return epsilon(q); }, -10.0, 10.0, 101);
  CHECK(e.net_flow == 0);
  CHECK(e.crossings.empty());
}

TEST_CASE("spectral flow handles an exact zero sample") {
  const SpectralFlowReport r =
      spectral_flow([](double q) { return q - 1.0; }, 0.0, 2.0, 5);
  CHECK(r.net_flow == 1);
  REQUIRE(r.crossings.size() == 1);
  CHECK(r.crossings[0].q == 1.0);
  CHECK(r.crossings[0].direction == 1);
}

TEST_CASE("spectral flow refuses what it cannot count") {
  // grazing zero: no sign change on either side
  CHECK_THROWS_AS(
      spectral_flow([](double q) { return (q - 1.0) * (q - 1.0); }, 0.0, 2.0, 3),
      AmbiguousCrossing);
  // endpoint too close to zero
  CHECK_THROWS_AS(spectral_flow([](double q) { return q - 0.05; }, 0.0, 1.0, 11),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral_flow([](double q) { return q; }, 5.0, 6.0, 1),
                  std::invalid_argument);
}
