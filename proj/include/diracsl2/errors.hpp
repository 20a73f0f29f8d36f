#pragma once

#include <stdexcept>
#include <string>

namespace diracsl2 {

// Ladder radicand fell below -1e-12: the requested (q, m) pair does not
// belong to a unitary module.
struct NegativeRadicand : std::domain_error {
  explicit NegativeRadicand(const std::string& what) : std::domain_error(what) {}
};

// Weight index not admissible for the given representation or bundle.
struct InadmissibleIndex : std::invalid_argument {
  explicit InadmissibleIndex(const std::string& what) : std::invalid_argument(what) {}
};

// Jacobi sweep budget exhausted before the off-diagonal norm target was met.
struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

// An eigenvalue curve touches zero without a detectable sign change; the
// crossing count would be a guess, so it is reported instead of counted.
struct AmbiguousCrossing : std::runtime_error {
  explicit AmbiguousCrossing(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diracsl2
