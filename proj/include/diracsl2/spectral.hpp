#pragma once

#include <string>
#include <vector>

#include "diracsl2/jacobi.hpp"
#include "diracsl2/operators.hpp"
#include "diracsl2/param_space.hpp"

namespace diracsl2 {

struct SpectrumLabel {
  enum class Kind { KBranch, ExtremalDiscrete, CoalescedLimit, Unlabeled };
  Kind kind = Kind::Unlabeled;
  int k = 0;
  Branch branch = Branch::Minus;

  static SpectrumLabel k_branch(int k, Branch b) { return {Kind::KBranch, k, b}; }
  static SpectrumLabel extremal() { return {Kind::ExtremalDiscrete, 0, Branch::Minus}; }
  static SpectrumLabel coalesced() { return {Kind::CoalescedLimit, 0, Branch::Minus}; }
  static SpectrumLabel none() { return {}; }

  friend bool operator==(const SpectrumLabel& a, const SpectrumLabel& b) {
    return a.kind == b.kind && a.k == b.k && a.branch == b.branch;
  }
};

struct SpectrumEntry {
  double eigenvalue = 0.0;
  // multiplicity in the full localized spectrum: exact algebraic coincidences
  // merge (tau = 0 pairs k <-> 1-k, tau = 1/2 pairs k <-> -k, the coalesced
  // limit, and discrete entries which all occur twice).  At tau = 0 the
  // merged partner of the lowest emitted label falls outside any finite
  // window, so multiplicity can exceed the entry's in-window copy count.
  int multiplicity = 1;
  SpectrumLabel label;
};

struct LocalSpectrum {
  ParamPoint point;
  int kmax = 0;
  // merged entries, ascending eigenvalue
  std::vector<SpectrumEntry> entries;
  // flat per-block eigenvalue multiset over labels |k| <= kmax (for oracle
  // output: the interior eigenvalues), ascending; comparisons use this
  std::vector<double> block_values;
  // oracle only: eigenvalues supported on the window's boundary ring
  std::vector<double> boundary_values;
};

// Closed-form route.  Localized Dirac eigenvalues are
// -1/2 +- sqrt(1/4 + q + 2 m(m-1)) over the window's block weights, plus the
// extremal value -ell (multiplicity 2) on the discrete branch.  kmax >= 0.
LocalSpectrum closed_form_spectrum(const ParamPoint& p, int kmax);

struct OracleOptions {
  JacobiOptions jacobi;
  double cluster_tol = 1e-8;  // numerical multiplicity grouping
};

// Brute-force route: diagonalize the truncated Dirac matrix with cyclic
// Jacobi, no knowledge of the closed form.  Entries are clustered and
// unlabeled; eigenvalues whose eigenvectors live on the boundary ring are
// reported in boundary_values and excluded from block_values.
LocalSpectrum oracle_spectrum(const ParamPoint& p, const TruncationWindow& w,
                              const OracleOptions& opts = {});

struct ComparisonReport {
  bool matched = false;
  double max_deviation = 0.0;  // over matched sorted pairs
  std::size_t compared = 0;
  std::string detail;  // empty when matched
};

// Bijective multiset comparison of block_values at a shared parameter point:
// sizes must agree and sorted values must pair within tol.  Never throws on
// mismatch; the report carries the worst deviation and a description.
ComparisonReport compare_spectra(const LocalSpectrum& a, const LocalSpectrum& b, double tol);

}  // namespace diracsl2
