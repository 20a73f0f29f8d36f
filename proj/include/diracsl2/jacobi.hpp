#pragma once

#include <vector>

#include "diracsl2/linalg.hpp"

namespace diracsl2 {

struct JacobiOptions {
  int max_sweeps = 50;
  double off_tol = 1e-12;  // target for the off-diagonal norm
};

struct EigenSystem {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]; orthonormal
  int sweeps_used = 0;
};

// Cyclic Jacobi diagonalization of a real symmetric matrix.  Rotations with
// an exactly zero pivot are skipped, which keeps exact block sparsity: an
// entry that starts as 0.0 between uncoupled index sets stays 0.0, and every
// eigenvector column is supported on a single block.  Throws
// ConvergenceFailure when the sweep budget runs out first.
EigenSystem jacobi_eigensystem(DenseMatrix a, const JacobiOptions& opts = {});

}  // namespace diracsl2
