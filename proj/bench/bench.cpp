// Timing comparison of the serial and OpenMP execution policies on the three
// heavy sweep kernels.  Both policies run the same indexed_map shape, so the
// outputs are bitwise identical; this binary reports wall time only.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "diracsl2/bundles.hpp"
#include "diracsl2/cohomology.hpp"
#include "diracsl2/param_space.hpp"
#include "diracsl2/spectral.hpp"
#include "diracsl2/sweeps.hpp"

using namespace diracsl2;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// closed form vs brute force at 60 points, the oracle suite's inner loop
double bench_oracle(Exec exec, double& sink) {
  const std::vector<double> qs = linspace(0.3, 40.0, 60);
  const auto start = std::chrono::steady_clock::now();
  const auto devs = indexed_map<double>(qs.size(), exec, [&](std::size_t i) {
    const ParamPoint p = ParamPoint::principal(qs[i], 0.37);
    const LocalSpectrum a = closed_form_spectrum(p, 8);
    const LocalSpectrum b = oracle_spectrum(p, TruncationWindow(8));
    return compare_spectra(a, b, 1e-9).max_deviation;
  });
  for (double d : devs) sink += d;
  return seconds_since(start);
}

// the kernel-locus grid from the cohomology suite
double bench_grid(Exec exec, double& sink) {
  constexpr int kN = 400;
  const std::vector<double> qs = linspace(0.25, 3.0, kN);
  const auto start = std::chrono::steady_clock::now();
  const auto dims = indexed_map<int>(static_cast<std::size_t>(kN) * kN, exec, [&](std::size_t i) {
    const ParamPoint p = ParamPoint::principal(qs[i / kN], double(i % kN) / kN);
    return dirac_cohomology(p).dimension;
  });
  for (int d : dims) sink += d;
  return seconds_since(start);
}

// the discriminant floor scan
double bench_discriminant(Exec exec, double& sink) {
  const std::vector<double> qs = linspace(-100.0, 100.0, 100000);
  const auto start = std::chrono::steady_clock::now();
  const auto vals = indexed_map<double>(qs.size() * 20, exec, [&](std::size_t i) {
    const std::size_t ki = i / qs.size();
    const int k = ki < 10 ? -10 + static_cast<int>(ki) : static_cast<int>(ki - 10) + 1;
    return discriminant(k, qs[i % qs.size()]);
  });
  double lo = vals[0];
  for (double v : vals) lo = std::min(lo, v);
  sink += lo;
  return seconds_since(start);
}

}  // namespace

int main() {
  double sink = 0.0;
  std::printf("execution policies: Serial = 1 thread, Parallel = %d thread(s)\n",
              max_threads(Exec::Parallel));
  std::printf("%-22s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");

  struct Row {
    const char* name;
    double (*fn)(Exec, double&);
  };
  const Row rows[] = {{"oracle agreement x60", bench_oracle},
                      {"kernel-locus 400x400", bench_grid},
                      {"discriminant 2e6", bench_discriminant}};
  for (const Row& row : rows) {
    const double ts = row.fn(Exec::Serial, sink);
    const double tp = row.fn(Exec::Parallel, sink);
    std::printf("%-22s %12.3f %12.3f %8.2fx\n", row.name, ts, tp, ts / tp);
  }
  // keep the accumulated results observable so the work cannot be elided
  std::printf("checksum %.6g\n", sink);
  return 0;
}
