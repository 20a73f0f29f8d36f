#include "diracsl2/param_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diracsl2 {
namespace {

constexpr double kMembershipTol = 1e-12;

double wrap_unit(double tau) {
  double t = tau - std::floor(tau);
  if (t >= 1.0) t = 0.0;  // values just below an integer can round up
  return t;
}

}  // namespace

ParamPoint ParamPoint::discrete(double q) {
  if (!(q <= 0.25)) throw std::invalid_argument("discrete branch requires q <= 1/4");
  if (q == 0.25) return limit_of_discrete_series();
  return ParamPoint(Series::Discrete, q, 0.0);
}

ParamPoint ParamPoint::discrete_from_ell(double ell) {
  if (!(ell >= 0.5)) throw std::invalid_argument("discrete branch requires ell >= 1/2");
  return discrete(ell * (1.0 - ell));
}

ParamPoint ParamPoint::principal(double q, double tau) {
  if (!(q >= 0.25)) throw std::invalid_argument("principal branch requires q >= 1/4");
  if (!std::isfinite(tau)) throw std::invalid_argument("tau must be finite");
  return ParamPoint(Series::Principal, q, wrap_unit(tau));
}

ParamPoint ParamPoint::limit_of_discrete_series() {
  return ParamPoint(Series::Principal, 0.25, 0.5);
}

bool ParamPoint::is_limit_of_discrete_series() const {
  return series_ == Series::Principal && q_ == 0.25 && tau_ == 0.5;
}

double ParamPoint::tau() const {
  if (!is_principal()) throw std::logic_error("tau is defined on the principal branch only");
  return tau_;
}

double ParamPoint::ell() const {
  if (q_ > 0.25) throw std::logic_error("ell is defined for q <= 1/4 only");
  return 0.5 + std::sqrt(0.25 - q_);
}

double ParamPoint::sigma() const {
  if (!is_principal()) throw std::logic_error("sigma is defined on the principal branch only");
  return std::sqrt(q_ - 0.25);
}

bool approx_equal(const ParamPoint& a, const ParamPoint& b, double tol) {
  if (a.series() != b.series()) return false;
  if (std::abs(a.q() - b.q()) > tol) return false;
  if (a.is_principal()) {
    double d = std::abs(a.tau() - b.tau());
    d = std::min(d, 1.0 - d);
    if (d > tol) return false;
  }
  return true;
}

DiscPoint::DiscPoint(double x, double y) : x_(x), y_(y) {
  if (!(in_disc() || in_segment()))
    throw std::invalid_argument("point lies outside the disc-and-segment model");
}

bool DiscPoint::in_disc() const { return x_ * x_ + y_ * y_ <= 1.0 + kMembershipTol; }

bool DiscPoint::in_segment() const {
  return std::abs(y_) <= kMembershipTol && x_ >= 1.0 - kMembershipTol &&
         x_ <= 2.0 + kMembershipTol;
}

DiscPoint to_compact_model(const ParamPoint& p) {
  if (p.is_principal()) {
    const double r = 1.0 / (p.q() + 0.75);
    const double angle = 2.0 * std::numbers::pi * (p.tau() - 0.5);
    return DiscPoint(r * std::cos(angle), r * std::sin(angle));
  }
  return DiscPoint(2.0 - 1.0 / (1.25 - p.q()), 0.0);
}

DiscPoint contraction_homotopy(double t, const DiscPoint& y) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("homotopy time outside [0,1]");
  if (t <= 0.5) return DiscPoint(y.x(), (1.0 - 2.0 * t) * y.y());
  // Convex-combination form so the endpoint t = 1 collapses to 2 exactly.
  const double u = 2.0 * t - 1.0;
  return DiscPoint(y.x() * (1.0 - u) + 2.0 * u, 0.0);
}

HelixCoordinates helix_coordinates(const ParamPoint& p, double eigenvalue) {
  if (!p.is_principal())
    throw std::logic_error("helix coordinates cover the principal branch only");
  return {1.0 / (p.q() + 0.75), 2.0 * std::numbers::pi * (p.tau() - 0.5), eigenvalue};
}

double plancherel_density(const ParamPoint& p) {
  if (p.is_discrete()) return p.ell() - 0.5;
  const double s = p.sigma();
  if (s == 0.0) return 0.0;
  const double a = 2.0 * std::numbers::pi * s;
  // Re tanh(pi(s + i tau)) = sinh(2 pi s) / (cosh(2 pi s) + cos(2 pi tau)).
  // Past a ~ 40 the cosine is below resolution and tanh has saturated to 1.
  if (a >= 40.0) return s;
  return s * std::sinh(a) / (std::cosh(a) + std::cos(2.0 * std::numbers::pi * p.tau()));
}

}  // namespace diracsl2
