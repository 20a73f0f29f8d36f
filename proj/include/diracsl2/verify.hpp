#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diracsl2/sweeps.hpp"

namespace diracsl2::verify {

struct Options {
  int kmax = 8;       // truncation for every spectral suite; >= 1
  double tol = 1e-9;  // eigenvalue agreement tolerance
  std::uint64_t seed = 20250819ULL;
  int sample_points = 200;  // random parameter points in the oracle suite
  // Bias added to the analytic side of the oracle and decomposition suites.
  // Zero in normal runs; a nonzero value must turn those suites red, which is
  // how the harness itself is audited.
  double perturb = 0.0;
  Exec exec = Exec::Parallel;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;  // one line of measured numbers, or the first failure
  double seconds = 0.0;
};

// Verification suites, in canonical order:
//   params        compact model: identifications, exact gluing, contraction
//   oracle        closed-form spectra vs brute-force diagonalization
//   coalescence   the double eigenvalue -1/2 at the limit of discrete series
//   discriminant  the uniform floor 2 of the eigenline discriminant
//   flow          spectral flow of the distinguished curve vs the others
//   decomposition eigenline curves exhaust the truncated block spectrum
//   cohomology    kernel locus equivalence on a grid, arc spinors, dim checks
//   nokernel      spectral gap along the discrete branch
//   determinism   serial/parallel and run-to-run byte stability
const std::vector<std::string>& suite_names();

// Runs the named suites (unknown names throw std::invalid_argument).  A suite
// that throws is reported as failed with the exception text, so a red run
// always produces a complete table.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const Options& opt);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace diracsl2::verify
