#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace diracsl2 {

// Dense row-major real matrix, sized at construction.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_symmetric(double tol) const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

// sqrt of the sum of squares of the strict upper triangle.
double offdiag_norm(const DenseMatrix& a);

std::vector<double> mat_vec(const DenseMatrix& a, const std::vector<double>& x);

struct Eigen2 {
  std::array<double, 2> values;                  // ascending
  std::array<std::array<double, 2>, 2> vectors;  // vectors[i] pairs with values[i], unit length
};

// Closed-form eigensystem of [[a, c], [c, b]].  The eigenvector formula is
// chosen per eigenvalue by the larger pivot, so it stays stable when c is
// tiny; signs are canonical (first nonzero coordinate positive).
Eigen2 eigen2x2_sym(double a, double b, double c);

}  // namespace diracsl2
