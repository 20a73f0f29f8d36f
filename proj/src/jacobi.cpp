#include "diracsl2/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "diracsl2/errors.hpp"

namespace diracsl2 {
namespace {

void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const std::size_t n = a.rows();
  const double apq = a(p, q);
  const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
  double t;
  if (std::abs(theta) > 1e154) {
    t = 0.5 / theta;  // avoids theta*theta overflow; rotation is already tiny
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a(i, p);
    const double aiq = a(i, q);
    a(i, p) = c * aip - s * aiq;
    a(p, i) = a(i, p);
    a(i, q) = s * aip + c * aiq;
    a(q, i) = a(i, q);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double vip = v(i, p);
    const double viq = v(i, q);
    v(i, p) = c * vip - s * viq;
    v(i, q) = s * vip + c * viq;
  }
}

}  // namespace

EigenSystem jacobi_eigensystem(DenseMatrix a, const JacobiOptions& opts) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("jacobi: square matrix required");
  if (!a.is_symmetric(1e-13 * std::max(1.0, a.max_abs())))
    throw std::invalid_argument("jacobi: symmetric matrix required");

  DenseMatrix v = DenseMatrix::identity(n);
  int sweeps = 0;
  double off = offdiag_norm(a);
  while (off > opts.off_tol) {
    if (sweeps >= opts.max_sweeps)
      throw ConvergenceFailure("jacobi: off-diagonal norm " + std::to_string(off) + " after " +
                               std::to_string(sweeps) + " sweeps (target " +
                               std::to_string(opts.off_tol) + ")");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, v, p, q);
    ++sweeps;
    off = offdiag_norm(a);
  }

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(perm[j], perm[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, perm[j]);
  }
  out.sweeps_used = sweeps;
  return out;
}

}  // namespace diracsl2
