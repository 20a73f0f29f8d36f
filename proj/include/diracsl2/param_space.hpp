#pragma once

#include <complex>

namespace diracsl2 {

// A point of the tempered parameter space of the universal cover of SL(2,R):
// either a discrete-series pair, indexed by the Casimir value q < 1/4
// (equivalently by the lowest weight ell = 1/2 + sqrt(1/4 - q) > 1/2), or a
// principal-series point (q >= 1/4, angular coordinate tau in [0,1) with
// (q,0) ~ (q,1)).  The limit of discrete series sits at q = 1/4 and is
// identified with the principal point (1/4, 1/2); it is stored in that
// canonical form, so equality is plain field comparison.
class ParamPoint {
 public:
  enum class Series { Discrete, Principal };

  static ParamPoint discrete(double q);
  static ParamPoint discrete_from_ell(double ell);
  static ParamPoint principal(double q, double tau);
  static ParamPoint limit_of_discrete_series();

  Series series() const { return series_; }
  bool is_discrete() const { return series_ == Series::Discrete; }
  bool is_principal() const { return series_ == Series::Principal; }
  bool is_limit_of_discrete_series() const;

  double q() const { return q_; }

  // Angular coordinate, canonical in [0,1).  Principal branch only.
  double tau() const;

  // Lowest weight ell = 1/2 + sqrt(1/4 - q); satisfies ell(1-ell) = q.
  // Defined for q <= 1/4 (the discrete branch, and 1/2 at the limit point).
  double ell() const;

  // sigma = sqrt(q - 1/4) >= 0.  Principal branch only.
  double sigma() const;

  friend bool operator==(const ParamPoint& a, const ParamPoint& b) {
    return a.series_ == b.series_ && a.q_ == b.q_ && a.tau_ == b.tau_;
  }
  friend bool operator!=(const ParamPoint& a, const ParamPoint& b) { return !(a == b); }

 private:
  ParamPoint(Series s, double q, double tau) : series_(s), q_(q), tau_(tau) {}

  Series series_;
  double q_;
  double tau_;  // 0 on the discrete branch
};

// Componentwise closeness; tau distance is measured around the circle.
// Points on different branches never compare close.
bool approx_equal(const ParamPoint& a, const ParamPoint& b, double tol);

// Sign of an eigenvalue branch or the parity of an eigenline bundle:
// Minus is the lower branch (-1/2 - sqrt, or omega/lambda-), Plus the upper.
enum class Branch { Minus, Plus };

// A point of the compact model: the closed unit disc A glued to the segment
// B = [1,2] at the point 1.  Membership is validated to 1e-12.
class DiscPoint {
 public:
  DiscPoint(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }
  std::complex<double> value() const { return {x_, y_}; }

  bool in_disc() const;
  bool in_segment() const;

  friend bool operator==(const DiscPoint& a, const DiscPoint& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  friend bool operator!=(const DiscPoint& a, const DiscPoint& b) { return !(a == b); }

 private:
  double x_;
  double y_;
};

// Homeomorphism onto the model minus the segment end {2}:
//   principal (q,tau) -> (q + 3/4)^{-1} exp(2 pi i (tau - 1/2)),
//   discrete   q      -> 2 - (5/4 - q)^{-1}.
// The limit of discrete series lands exactly on the gluing point 1.
DiscPoint to_compact_model(const ParamPoint& p);

// Deformation retraction of the model onto {2}: for t <= 1/2 the disc is
// collapsed onto its real diameter, for t >= 1/2 everything slides along the
// real axis towards 2.  t=0 is the identity and t=1 is constant at 2, both
// exactly; the segment B is mapped into itself for every t.  t outside [0,1]
// is a contract violation.
DiscPoint contraction_homotopy(double t, const DiscPoint& y);

struct HelixCoordinates {
  double r;      // (q + 3/4)^{-1}, in (0, 1]
  double theta;  // 2 pi (tau - 1/2), in [-pi, pi)
  double z;      // the eigenvalue
};

// Cylindrical chart for spectra over the principal branch.
HelixCoordinates helix_coordinates(const ParamPoint& p, double eigenvalue);

// Plancherel density: sigma * Re tanh(pi(sigma + i tau)) on the principal
// branch, ell - 1/2 on the discrete branch.  Nonnegative everywhere.
double plancherel_density(const ParamPoint& p);

}  // namespace diracsl2
