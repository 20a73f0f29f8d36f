#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

#include "diracsl2/errors.hpp"
#include "diracsl2/operators.hpp"
#include "diracsl2/param_space.hpp"
#include "doctest.h"

using namespace diracsl2;

namespace {

bool mat2c_equal(const Mat2c& a, const Mat2c& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

Mat2c mat2c_scale(const Mat2c& a, std::complex<double> s) {
  Mat2c r = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] *= s;
  return r;
}

Mat2c mat2c_add(const Mat2c& a, const Mat2c& b) {
  Mat2c r = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] += b[i][j];
  return r;
}

Mat2c mat2c_identity() {
  return {{{std::complex<double>{1.0, 0.0}, {0.0, 0.0}},
           {std::complex<double>{0.0, 0.0}, {1.0, 0.0}}}};
}

}  // namespace

TEST_CASE("ladder coefficients") {
  CHECK(ladder_coefficient(2.0, 0.5, LadderDirection::Up) == std::sqrt(2.75));
  // lowering from the lowest discrete weight closes the ladder exactly
  CHECK(ladder_coefficient(-0.75, 1.5, LadderDirection::Down) == 0.0);
  // rounding dust inside the clamp band is forgiven; real negativity is not
  CHECK(ladder_coefficient(-5e-13, 0.0, LadderDirection::Down) == 0.0);
  CHECK_THROWS_AS(ladder_coefficient(-1e-11, 0.0, LadderDirection::Down), NegativeRadicand);
}

TEST_CASE("truncation window validation") {
  CHECK_THROWS_AS(TruncationWindow(0), std::invalid_argument);
  CHECK(TruncationWindow(1).kmax == 1);
}

TEST_CASE("principal basis layout") {
  const ParamPoint p = ParamPoint::principal(2.0, 0.3);
  const OperatorBasis basis = make_operator_basis(p, TruncationWindow(2));
  REQUIRE(basis.blocks.size() == 7);  // k = -3..3
  CHECK(basis.dim() == 14);
  CHECK_FALSE(basis.has_extremals());
  CHECK(basis.blocks.front().m == 0.3 - 3.0);
  CHECK(basis.blocks.front().k == -3);
  CHECK_FALSE(basis.blocks.front().interior);
  CHECK_FALSE(basis.blocks.back().interior);
  for (const BlockInfo& b : basis.blocks) {
    CHECK(b.interior == (std::abs(b.k) <= 2));
    CHECK(basis.indices[b.pos].m == b.m);
    CHECK(basis.indices[b.pos].component == Component::Top);
    CHECK(basis.indices[b.pos + 1].m == b.m - 1.0);
    CHECK(basis.indices[b.pos + 1].component == Component::Bottom);
  }
}

TEST_CASE("discrete basis layout keeps extremal singletons last") {
  const ParamPoint p = ParamPoint::discrete(0.0);  // ell = 1
  const OperatorBasis basis = make_operator_basis(p, TruncationWindow(2));
  REQUIRE(basis.blocks.size() == 6);
  CHECK(basis.dim() == 14);
  REQUIRE(basis.has_extremals());
  CHECK(basis.extremal_top == 12);
  CHECK(basis.extremal_bottom == 13);
  CHECK(basis.indices[12].m == 1.0);
  CHECK(basis.indices[12].component == Component::Top);
  CHECK(basis.indices[13].m == -1.0);
  CHECK(basis.indices[13].component == Component::Bottom);

  // blocks ascend in m: negative ladder -3,-2,-1 then positive 2,3,4
  const double expected_m[6] = {-3.0, -2.0, -1.0, 2.0, 3.0, 4.0};
  const int expected_k[6] = {3, 2, 1, 1, 2, 3};
  for (int i = 0; i < 6; ++i) {
    CHECK(basis.blocks[i].m == expected_m[i]);
    CHECK(basis.blocks[i].k == expected_k[i]);
    CHECK(basis.blocks[i].interior == (expected_k[i] <= 2));
  }
}

TEST_CASE("invariant block cells") {
  const DenseMatrix a = invariant_block(ParamPoint::principal(0.5, 0.5), 0.5);
  CHECK(a(0, 0) == 0.5);
  CHECK(a(1, 1) == 0.5);
  CHECK(a(0, 1) == 0.5);
  CHECK(a(1, 0) == 0.5);

  const DenseMatrix b = invariant_block(ParamPoint::principal(2.0, 0.0), 1.0);
  CHECK(b(0, 0) == 1.0);
  CHECK(b(1, 1) == 0.0);
  CHECK(b(0, 1) == std::sqrt(2.0));

  CHECK_THROWS_AS(invariant_block(ParamPoint::principal(2.0, 0.3), 0.5), InadmissibleIndex);
  const ParamPoint d = ParamPoint::discrete(0.0);  // ell = 1
  CHECK_THROWS_AS(invariant_block(d, 1.0), InadmissibleIndex);
  CHECK_NOTHROW(invariant_block(d, -1.0));
}

TEST_CASE("block operator structure on the discrete branch") {
  const ParamPoint p = ParamPoint::discrete(0.0);  // ell = 1
  const TruncatedOperator op = build_block_operator(p, TruncationWindow(2));
  const DenseMatrix& m = op.matrix;
  REQUIRE(m.rows() == 14);
  CHECK(m.is_symmetric(0.0));

  CHECK(m(op.basis.extremal_top, op.basis.extremal_top) == 1.0);
  CHECK(m(op.basis.extremal_bottom, op.basis.extremal_bottom) == 1.0);

  // each 2x2 cell equals the invariant block at its weight
  for (const BlockInfo& b : op.basis.blocks) {
    const DenseMatrix cell = invariant_block(p, b.m);
    CHECK(m(b.pos, b.pos) == cell(0, 0));
    CHECK(m(b.pos, b.pos + 1) == cell(0, 1));
    CHECK(m(b.pos + 1, b.pos) == cell(1, 0));
    CHECK(m(b.pos + 1, b.pos + 1) == cell(1, 1));
  }

  // nothing couples outside the cells: exact zeros everywhere else
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const bool same_cell = (i / 2 == j / 2) && i < 12 && j < 12;
      const bool extremal_diag = i == j && i >= 12;
      if (!same_cell && !extremal_diag) CHECK(m(i, j) == 0.0);
    }
  }
}

TEST_CASE("dirac operator is the negated block operator") {
  const ParamPoint p = ParamPoint::principal(1.5, 0.25);
  const TruncationWindow w(1);
  const TruncatedOperator block = build_block_operator(p, w);
  const TruncatedOperator dirac = build_dirac_operator(p, w);
  REQUIRE(dirac.matrix.rows() == block.matrix.rows());
  for (std::size_t i = 0; i < block.matrix.rows(); ++i)
    for (std::size_t j = 0; j < block.matrix.cols(); ++j)
      CHECK(dirac.matrix(i, j) == -block.matrix(i, j));
}

TEST_CASE("clifford generators satisfy the Cl(3) relations exactly") {
  const CliffordGenerators g = clifford_generators();
  const Mat2c minus_id = mat2c_scale(mat2c_identity(), {-1.0, 0.0});
  for (int k = 0; k < 3; ++k) {
    CHECK(mat2c_equal(mat2c_mul(g.c[k], g.c[k]), minus_id));
  }
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const Mat2c anti = mat2c_add(mat2c_mul(g.c[a], g.c[b]), mat2c_mul(g.c[b], g.c[a]));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(anti[i][j] == std::complex<double>{0.0, 0.0});
    }
  }
  // orientation class: the volume element is -1
  const Mat2c vol = mat2c_mul(mat2c_mul(g.c[0], g.c[1]), g.c[2]);
  CHECK(mat2c_equal(vol, minus_id));
}
