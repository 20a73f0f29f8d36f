#pragma once

#include <array>
#include <functional>
#include <vector>

#include "diracsl2/param_space.hpp"

namespace diracsl2 {

// Weight m of the invariant block carrying the k-th eigenline pair over the
// tau = 1/2 line: 1/2 +- sqrt(1/4 - q) + k for q <= 1/4 (sign following k),
// 1/2 + k for q >= 1/4.  Continuous across q = 1/4.  k = 0 is inadmissible
// (the extremal pair is covered by the distinguished curves).
double bundle_weight(int k, double q);

// 1/4 + q + 2 m(m-1) at m = bundle_weight(k, q), evaluated in closed form:
//   q <= 1/4:  1/4 - q + 2 (k^2 + 2|k| sqrt(1/4 - q))
//   q >= 1/4:  q - 1/4 + 2 k^2.
// For k != 0 it is >= 2 with the minimum attained exactly at |k|=1, q=1/4.
// k = 0 is allowed here (the formula still makes sense).
double discriminant(int k, double q);

// Block-operator eigenvalue curves along the tau = 1/2 line.  omega and
// epsilon belong to the distinguished pair: on q <= 1/4 both equal the
// extremal eigenvalue ell = 1/2 + sqrt(1/4 - q) (a two-dimensional
// eigenspace), and for q > 1/4 they split into 1/2 -+ sqrt(q - 1/4).
// omega is strictly decreasing with its only zero at q = 1/2; epsilon >= 1/2.
double omega(double q);
double epsilon(double q);

// 1/2 +- sqrt(discriminant(k, q)), k != 0.  lambda_plus >= 1/2 + sqrt(2) and
// lambda_minus <= 1/2 - sqrt(2), so neither family ever crosses zero.
double lambda_plus(int k, double q);
double lambda_minus(int k, double q);

struct BundleId {
  int k = 0;                     // 0 selects the distinguished pair
  Branch branch = Branch::Minus;  // Minus: omega / lambda-;  Plus: epsilon / lambda+
};

struct EigenCurveSample {
  double q = 0.0;
  double eigenvalue = 0.0;
  // fibre the coordinates refer to: a 2x2 block at weight m, or the span of
  // the two extremal discrete vectors {(f_ell, 0), (0, f_-ell)} (m = ell)
  enum class Fibre { Block, ExtremalPair } fibre = Fibre::Block;
  double m = 0.0;
  std::array<double, 2> vector{1.0, 0.0};  // unit length
};

// Unit eigenvector of the bundle's fibre at q with canonical sign (first
// nonzero coordinate positive); eigenvalue is the matching curve value.
// The distinguished pair has constant coordinates (1, -+1)/sqrt(2) across
// the gluing, so canonical signs are already continuous in q.
EigenCurveSample bundle_vector(const BundleId& id, double q);

// Samples the bundle over [q_min, q_max] (inclusive linspace), flipping
// signs where needed so consecutive vectors overlap positively.
std::vector<EigenCurveSample> track_bundle(const BundleId& id, double q_min, double q_max,
                                           int samples);

struct Crossing {
  double q = 0.0;
  int direction = 0;  // sign of the slope at the zero: +1 upward, -1 downward
};

struct SpectralFlowReport {
  std::vector<Crossing> crossings;
  int net_flow = 0;
};

// Signed zero count of a continuous scalar family over [q_min, q_max]:
// samples the family uniformly, bisects every sign change to width 1e-10,
// and sums crossing directions.  Preconditions: samples >= 2 and both
// endpoint values at least 0.1 in magnitude.  An interior sample within
// 1e-12 of zero with equal signs on both sides raises AmbiguousCrossing.
SpectralFlowReport spectral_flow(const std::function<double(double)>& family, double q_min,
                                 double q_max, int samples);

}  // namespace diracsl2
