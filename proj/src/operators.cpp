#include "diracsl2/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "diracsl2/errors.hpp"

namespace diracsl2 {
namespace {

constexpr double kClampTol = 1e-12;
constexpr double kIndexTol = 1e-9;

bool near_integer(double x, double& rounded) {
  rounded = std::round(x);
  return std::abs(x - rounded) <= kIndexTol;
}

}  // namespace

double ladder_coefficient(double q, double m, LadderDirection dir) {
  const double radicand = q + m * (dir == LadderDirection::Up ? m + 1.0 : m - 1.0);
  if (radicand < -kClampTol)
    throw NegativeRadicand("ladder radicand " + std::to_string(radicand) + " at q=" +
                           std::to_string(q) + ", m=" + std::to_string(m));
  return radicand <= 0.0 ? 0.0 : std::sqrt(radicand);
}

TruncationWindow::TruncationWindow(int kmax_) : kmax(kmax_) {
  if (kmax_ < 1) throw std::invalid_argument("truncation window requires kmax >= 1");
}

OperatorBasis make_operator_basis(const ParamPoint& p, const TruncationWindow& w) {
  OperatorBasis b;
  const int kedge = w.kmax + 1;
  if (p.is_principal()) {
    const double tau = p.tau();
    for (int k = -kedge; k <= kedge; ++k) {
      const double m = tau + k;
      b.blocks.push_back({m, k, std::abs(k) <= w.kmax, b.indices.size()});
      b.indices.push_back({m, Component::Top});
      b.indices.push_back({m - 1.0, Component::Bottom});
    }
    return b;
  }
  const double ell = p.ell();
  // negative-weight ladder first (ascending m), label j+1 pairs with the
  // positive block carrying the same spectral values
  for (int j = w.kmax; j >= 0; --j) {
    const double m = -ell - j;
    b.blocks.push_back({m, j + 1, j + 1 <= w.kmax, b.indices.size()});
    b.indices.push_back({m, Component::Top});
    b.indices.push_back({m - 1.0, Component::Bottom});
  }
  for (int k = 1; k <= kedge; ++k) {
    const double m = ell + k;
    b.blocks.push_back({m, k, k <= w.kmax, b.indices.size()});
    b.indices.push_back({m, Component::Top});
    b.indices.push_back({m - 1.0, Component::Bottom});
  }
  b.extremal_top = b.indices.size();
  b.indices.push_back({ell, Component::Top});
  b.extremal_bottom = b.indices.size();
  b.indices.push_back({-ell, Component::Bottom});
  return b;
}

TruncatedOperator build_block_operator(const ParamPoint& p, const TruncationWindow& w) {
  TruncatedOperator op{DenseMatrix(), make_operator_basis(p, w), p, w};
  const std::size_t n = op.basis.dim();
  op.matrix = DenseMatrix(n, n, 0.0);
  const double q = p.q();
  for (const BlockInfo& blk : op.basis.blocks) {
    const double s = ladder_coefficient(q, blk.m, LadderDirection::Down);
    op.matrix(blk.pos, blk.pos) = blk.m;
    op.matrix(blk.pos + 1, blk.pos + 1) = -(blk.m - 1.0);
    op.matrix(blk.pos, blk.pos + 1) = s;
    op.matrix(blk.pos + 1, blk.pos) = s;
  }
  if (op.basis.has_extremals()) {
    const double ell = p.ell();
    op.matrix(op.basis.extremal_top, op.basis.extremal_top) = ell;
    op.matrix(op.basis.extremal_bottom, op.basis.extremal_bottom) = ell;
  }
  return op;
}

TruncatedOperator build_dirac_operator(const ParamPoint& p, const TruncationWindow& w) {
  TruncatedOperator op = build_block_operator(p, w);
  const std::size_t n = op.basis.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) op.matrix(i, j) = -op.matrix(i, j);
  return op;
}

DenseMatrix invariant_block(const ParamPoint& p, double m) {
  double rounded = 0.0;
  if (p.is_principal()) {
    if (!near_integer(m - p.tau(), rounded))
      throw InadmissibleIndex("weight " + std::to_string(m) +
                              " is not congruent to tau on the principal branch");
  } else {
    const double ell = p.ell();
    const bool plus_side = near_integer(m - ell, rounded) && rounded >= 1.0;
    const bool minus_side = near_integer(-ell - m, rounded) && rounded >= 0.0;
    if (!plus_side && !minus_side)
      throw InadmissibleIndex("weight " + std::to_string(m) +
                              " does not index a block of the discrete pair");
  }
  DenseMatrix blk(2, 2);
  const double s = ladder_coefficient(p.q(), m, LadderDirection::Down);
  blk(0, 0) = m;
  blk(1, 1) = -(m - 1.0);
  blk(0, 1) = s;
  blk(1, 0) = s;
  return blk;
}

Mat2c mat2c_mul(const Mat2c& a, const Mat2c& b) {
  Mat2c r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

CliffordGenerators clifford_generators() {
  const std::complex<double> i{0.0, 1.0};
  CliffordGenerators g;
  g.c[0] = {{{i, 0.0}, {0.0, -i}}};
  g.c[1] = {{{0.0, i}, {i, 0.0}}};
  g.c[2] = {{{0.0, -1.0}, {1.0, 0.0}}};
  return g;
}

}  // namespace diracsl2
