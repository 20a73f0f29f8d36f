#include "diracsl2/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace diracsl2 {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool DenseMatrix::is_symmetric(double tol) const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double offdiag_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

std::vector<double> mat_vec(const DenseMatrix& a, const std::vector<double>& x) {
  if (x.size() != a.cols()) throw std::invalid_argument("mat_vec: size mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

Eigen2 eigen2x2_sym(double a, double b, double c) {
  const double mean = 0.5 * (a + b);
  const double rad = std::hypot(0.5 * (a - b), c);
  Eigen2 out;
  out.values = {mean - rad, mean + rad};
  for (int i = 0; i < 2; ++i) {
    const double lam = out.values[i];
    double vx, vy;
    if (std::abs(lam - a) >= std::abs(lam - b)) {
      vx = c;
      vy = lam - a;
    } else {
      vx = lam - b;
      vy = c;
    }
    const double n = std::hypot(vx, vy);
    if (n == 0.0) {
      // scalar matrix: any orthonormal pair will do
      out.vectors[i] = {i == 0 ? 1.0 : 0.0, i == 0 ? 0.0 : 1.0};
      continue;
    }
    vx /= n;
    vy /= n;
    if (vx < 0.0 || (vx == 0.0 && vy < 0.0)) {
      vx = -vx;
      vy = -vy;
    }
    out.vectors[i] = {vx, vy};
  }
  return out;
}

}  // namespace diracsl2
