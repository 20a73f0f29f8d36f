#include "diracsl2/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "diracsl2/errors.hpp"
#include "diracsl2/linalg.hpp"
#include "diracsl2/operators.hpp"

namespace diracsl2 {
namespace {

constexpr double kZeroSampleTol = 1e-12;
constexpr double kBisectionWidth = 1e-10;
constexpr double kEndpointMargin = 0.1;
constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_nonzero_k(int k, const char* who) {
  if (k == 0) throw InadmissibleIndex(std::string(who) + ": k = 0 is not an eigenline index");
}

}  // namespace

double bundle_weight(int k, double q) {
  require_nonzero_k(k, "bundle_weight");
  if (q >= 0.25) return 0.5 + k;
  const double s = std::sqrt(0.25 - q);
  return k > 0 ? 0.5 + s + k : 0.5 - s + k;
}

double discriminant(int k, double q) {
  const double k2 = static_cast<double>(k) * k;
  if (q >= 0.25) return (q - 0.25) + 2.0 * k2;
  const double s = std::sqrt(0.25 - q);
  return (0.25 - q) + 2.0 * (k2 + 2.0 * std::abs(k) * s);
}

double omega(double q) {
  return q <= 0.25 ? 0.5 + std::sqrt(0.25 - q) : 0.5 - std::sqrt(q - 0.25);
}

double epsilon(double q) {
  return q <= 0.25 ? 0.5 + std::sqrt(0.25 - q) : 0.5 + std::sqrt(q - 0.25);
}

double lambda_plus(int k, double q) {
  require_nonzero_k(k, "lambda_plus");
  return 0.5 + std::sqrt(discriminant(k, q));
}

double lambda_minus(int k, double q) {
  require_nonzero_k(k, "lambda_minus");
  return 0.5 - std::sqrt(discriminant(k, q));
}

EigenCurveSample bundle_vector(const BundleId& id, double q) {
  EigenCurveSample s;
  s.q = q;
  if (id.k == 0) {
    // constant coordinates diagonalize the distinguished fibre on both
    // branches: (1,-1)/sqrt(2) for omega, (1,1)/sqrt(2) for epsilon
    const bool lower = id.branch == Branch::Minus;
    s.eigenvalue = lower ? omega(q) : epsilon(q);
    s.vector = {kInvSqrt2, lower ? -kInvSqrt2 : kInvSqrt2};
    if (q < 0.25) {
      s.fibre = EigenCurveSample::Fibre::ExtremalPair;
      s.m = 0.5 + std::sqrt(0.25 - q);  // ell
    } else {
      s.fibre = EigenCurveSample::Fibre::Block;
      s.m = 0.5;
    }
    return s;
  }
  const double m = bundle_weight(id.k, q);
  const double c = ladder_coefficient(q, m, LadderDirection::Down);
  const Eigen2 eig = eigen2x2_sym(m, -(m - 1.0), c);
  const int which = id.branch == Branch::Minus ? 0 : 1;
  s.fibre = EigenCurveSample::Fibre::Block;
  s.m = m;
  s.eigenvalue = id.branch == Branch::Minus ? lambda_minus(id.k, q) : lambda_plus(id.k, q);
  s.vector = eig.vectors[which];
  return s;
}

std::vector<EigenCurveSample> track_bundle(const BundleId& id, double q_min, double q_max,
                                           int samples) {
  if (samples < 2 || !(q_min < q_max))
    throw std::invalid_argument("track_bundle: need samples >= 2 and q_min < q_max");
  std::vector<EigenCurveSample> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double q =
        i == samples - 1 ? q_max : q_min + (q_max - q_min) * i / double(samples - 1);
    EigenCurveSample s = bundle_vector(id, q);
    if (!out.empty()) {
      const auto& prev = out.back().vector;
      if (prev[0] * s.vector[0] + prev[1] * s.vector[1] < 0.0) {
        s.vector[0] = -s.vector[0];
        s.vector[1] = -s.vector[1];
      }
    }
    out.push_back(s);
  }
  return out;
}

SpectralFlowReport spectral_flow(const std::function<double(double)>& family, double q_min,
                                 double q_max, int samples) {
  if (samples < 2) throw std::invalid_argument("spectral_flow: samples must be >= 2");
  if (!(q_min < q_max)) throw std::invalid_argument("spectral_flow: q_min < q_max required");

  std::vector<double> qs(samples), fs(samples);
  for (int i = 0; i < samples; ++i) {
    qs[i] = i == samples - 1 ? q_max : q_min + (q_max - q_min) * i / double(samples - 1);
    fs[i] = family(qs[i]);
  }
  if (std::abs(fs.front()) < kEndpointMargin || std::abs(fs.back()) < kEndpointMargin)
    throw std::invalid_argument("spectral_flow: endpoint values must be >= 0.1 in magnitude");

  SpectralFlowReport report;
  auto add_crossing = [&](double q, double after) {
    const int dir = after > 0.0 ? 1 : -1;
    report.crossings.push_back({q, dir});
    report.net_flow += dir;
  };

  for (int i = 1; i + 1 < samples; ++i) {
    if (std::abs(fs[i]) >= kZeroSampleTol) continue;
    const double before = fs[i - 1];
    const double after = fs[i + 1];
    if (std::abs(before) < kZeroSampleTol || std::abs(after) < kZeroSampleTol ||
        before * after > 0.0)
      throw AmbiguousCrossing("family touches zero near q = " + std::to_string(qs[i]) +
                              " without a sign change");
    add_crossing(qs[i], after);
  }

  for (int i = 0; i + 1 < samples; ++i) {
    const double a = fs[i];
    const double b = fs[i + 1];
    if (std::abs(a) < kZeroSampleTol || std::abs(b) < kZeroSampleTol) continue;  // handled above
    if (a * b > 0.0) continue;
    double lo = qs[i], hi = qs[i + 1];
    double flo = a;
    while (hi - lo > kBisectionWidth) {
      const double mid = 0.5 * (lo + hi);
      const double fm = family(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm > 0.0) == (flo > 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    add_crossing(0.5 * (lo + hi), b);
  }

  std::sort(report.crossings.begin(), report.crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.q < b.q; });
  return report;
}

}  // namespace diracsl2
