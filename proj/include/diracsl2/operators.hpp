#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "diracsl2/linalg.hpp"
#include "diracsl2/param_space.hpp"

namespace diracsl2 {

enum class LadderDirection { Up, Down };

// Norming constant of the weight ladder: sqrt(q + m(m+1)) raising,
// sqrt(q + m(m-1)) lowering.  Radicands within 1e-12 of zero clamp to zero
// (ladder ends close exactly in theory; rounding may leave dust); anything
// lower raises NegativeRadicand.
double ladder_coefficient(double q, double m, LadderDirection dir);

enum class Component { Top, Bottom };

struct BasisIndex {
  double m;  // H0-weight of the vector
  Component component;
};

// Truncation by whole 2x2 invariant blocks: spectral labels |k| <= kmax + 1,
// the outermost ring flagged as boundary so comparisons use |k| <= kmax.
// Block truncation is exact - the operator is block diagonal - so the single
// guard ring only absorbs the labels the window cannot claim as interior.
struct TruncationWindow {
  explicit TruncationWindow(int kmax);
  int kmax;
};

struct BlockInfo {
  double m;         // weight of the Top member; the Bottom member sits at m - 1
  int k;            // spectral label (positive on both discrete ladders)
  bool interior;    // false on the outermost ring
  std::size_t pos;  // basis position of (Top, m); (Bottom, m-1) is pos + 1
};

struct OperatorBasis {
  std::vector<BasisIndex> indices;  // block pairs ascending in m, extremal singletons last
  std::vector<BlockInfo> blocks;
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::size_t extremal_top = npos;     // discrete branch: (Top, ell)
  std::size_t extremal_bottom = npos;  // discrete branch: (Bottom, -ell)
  bool has_extremals() const { return extremal_top != npos; }
  std::size_t dim() const { return indices.size(); }
};

OperatorBasis make_operator_basis(const ParamPoint& p, const TruncationWindow& w);

struct TruncatedOperator {
  DenseMatrix matrix;  // real symmetric, exactly block diagonal in the paired basis
  OperatorBasis basis;
  ParamPoint point;
  TruncationWindow window;
};

// Self-adjoint block operator [[H0, H+], [H-, -H0]] on the doubled module,
// cut to the window.  On the discrete branch the two extremal singletons are
// eigenvectors with eigenvalue ell, and no entry couples the positive-weight
// ladder to the negative-weight one.
TruncatedOperator build_block_operator(const ParamPoint& p, const TruncationWindow& w);

// The localized Dirac operator: the negative of the block operator.
TruncatedOperator build_dirac_operator(const ParamPoint& p, const TruncationWindow& w);

// The 2x2 cell [[m, s], [s, -(m-1)]], s = sqrt(q + m(m-1)), of the block
// operator on span{(f_m, 0), (0, f_{m-1})}.  m must be an admissible weight
// for p: m - tau integral on the principal branch, m in {ell+1, ell+2, ...}
// or {-ell, -ell-1, ...} on the discrete branch (tolerance 1e-9), else
// InadmissibleIndex.
DenseMatrix invariant_block(const ParamPoint& p, double m);

using Mat2c = std::array<std::array<std::complex<double>, 2>, 2>;

Mat2c mat2c_mul(const Mat2c& a, const Mat2c& b);

// c_k = i sigma_k for the three Pauli matrices; each squares to -I and the
// three pairwise anticommute, generating the Clifford algebra Cl(3).
struct CliffordGenerators {
  std::array<Mat2c, 3> c;
};

CliffordGenerators clifford_generators();

}  // namespace diracsl2
