#include "diracsl2/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace diracsl2 {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// both localized Dirac eigenvalues of the block at weight m
std::array<double, 2> dirac_pair(double q, double m) {
  // q - 1/4 + 2(m - 1/2)^2 >= 0 on both branches; clamp rounding dust
  const double x = std::max(0.25 + q + 2.0 * m * (m - 1.0), 0.0);
  const double root = std::sqrt(x);
  return {-0.5 - root, -0.5 + root};
}

int label_rank(const SpectrumLabel& l) { return static_cast<int>(l.kind); }

void sort_entries(std::vector<SpectrumEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    if (a.label.kind != b.label.kind) return label_rank(a.label) < label_rank(b.label);
    if (a.label.k != b.label.k) return a.label.k < b.label.k;
    return a.label.branch < b.label.branch;
  });
}

}  // namespace

LocalSpectrum closed_form_spectrum(const ParamPoint& p, int kmax) {
  if (kmax < 0) throw std::invalid_argument("closed_form_spectrum: kmax must be >= 0");
  LocalSpectrum out{p, kmax, {}, {}, {}};
  const double q = p.q();

  if (p.is_principal()) {
    const double tau = p.tau();
    for (int k = -kmax; k <= kmax; ++k) {
      const auto pr = dirac_pair(q, tau + k);
      out.block_values.push_back(pr[0]);
      out.block_values.push_back(pr[1]);
    }
    // merging is decided by the exact algebraic coincidence rules, never by
    // numerical proximity; tau is canonical so the comparisons are exact
    if (tau == 0.5) {
      if (q == 0.25) {
        // both k = 0 values sit at -1/2: the coalesced limit
        out.entries.push_back({-0.5, 2, SpectrumLabel::coalesced()});
      } else {
        const auto pr = dirac_pair(q, 0.5);
        out.entries.push_back({pr[0], 1, SpectrumLabel::k_branch(0, Branch::Minus)});
        out.entries.push_back({pr[1], 1, SpectrumLabel::k_branch(0, Branch::Plus)});
      }
      for (int k = 1; k <= kmax; ++k) {  // k and -k coincide
        const auto pr = dirac_pair(q, tau + k);
        out.entries.push_back({pr[0], 2, SpectrumLabel::k_branch(k, Branch::Minus)});
        out.entries.push_back({pr[1], 2, SpectrumLabel::k_branch(k, Branch::Plus)});
      }
    } else if (tau == 0.0) {
      for (int k = 1; k <= kmax; ++k) {  // k and 1-k coincide
        const auto pr = dirac_pair(q, tau + k);
        out.entries.push_back({pr[0], 2, SpectrumLabel::k_branch(k, Branch::Minus)});
        out.entries.push_back({pr[1], 2, SpectrumLabel::k_branch(k, Branch::Plus)});
      }
      // the partner of k = -kmax is kmax + 1, outside the emitted range; the
      // full-spectrum multiplicity is still 2
      const auto pr = dirac_pair(q, tau - kmax);
      out.entries.push_back({pr[0], 2, SpectrumLabel::k_branch(-kmax, Branch::Minus)});
      out.entries.push_back({pr[1], 2, SpectrumLabel::k_branch(-kmax, Branch::Plus)});
    } else {
      for (int k = -kmax; k <= kmax; ++k) {
        const auto pr = dirac_pair(q, tau + k);
        out.entries.push_back({pr[0], 1, SpectrumLabel::k_branch(k, Branch::Minus)});
        out.entries.push_back({pr[1], 1, SpectrumLabel::k_branch(k, Branch::Plus)});
      }
    }
  } else {
    const double ell = p.ell();
    out.block_values.push_back(-ell);
    out.block_values.push_back(-ell);
    out.entries.push_back({-ell, 2, SpectrumLabel::extremal()});
    for (int k = 1; k <= kmax; ++k) {
      // blocks at weights ell+k and 1-(ell+k) carry the same values
      const auto pr = dirac_pair(q, ell + k);
      for (int copy = 0; copy < 2; ++copy) {
        out.block_values.push_back(pr[0]);
        out.block_values.push_back(pr[1]);
      }
      out.entries.push_back({pr[0], 2, SpectrumLabel::k_branch(k, Branch::Minus)});
      out.entries.push_back({pr[1], 2, SpectrumLabel::k_branch(k, Branch::Plus)});
    }
  }

  sort_entries(out.entries);
  std::sort(out.block_values.begin(), out.block_values.end());
  return out;
}

LocalSpectrum oracle_spectrum(const ParamPoint& p, const TruncationWindow& w,
                              const OracleOptions& opts) {
  const TruncatedOperator op = build_dirac_operator(p, w);
  const EigenSystem es = jacobi_eigensystem(op.matrix, opts.jacobi);
  const std::size_t n = op.basis.dim();

  std::vector<bool> boundary_pos(n, false);
  for (const BlockInfo& blk : op.basis.blocks)
    if (!blk.interior) boundary_pos[blk.pos] = boundary_pos[blk.pos + 1] = true;

  // exact block sparsity of the Jacobi eigenvectors makes the support weight
  // an exact 0/1 indicator; 0.5 is a robust threshold
  std::vector<bool> on_boundary(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    double wb = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (boundary_pos[i]) wb += es.vectors(i, j) * es.vectors(i, j);
    on_boundary[j] = wb > 0.5;
  }

  LocalSpectrum out{p, w.kmax, {}, {}, {}};
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n && es.values[hi] - es.values[hi - 1] <= opts.cluster_tol) ++hi;
    double sum = 0.0;
    int interior_count = 0;
    for (std::size_t j = lo; j < hi; ++j) {
      if (on_boundary[j]) {
        out.boundary_values.push_back(es.values[j]);
      } else {
        sum += es.values[j];
        ++interior_count;
        out.block_values.push_back(es.values[j]);
      }
    }
    if (interior_count > 0)
      out.entries.push_back({sum / interior_count, interior_count, SpectrumLabel::none()});
    lo = hi;
  }
  std::sort(out.block_values.begin(), out.block_values.end());
  return out;
}

ComparisonReport compare_spectra(const LocalSpectrum& a, const LocalSpectrum& b, double tol) {
  ComparisonReport r;
  std::string prefix;
  if (!(a.point == b.point)) prefix = "parameter points differ; ";

  std::vector<double> va = a.block_values;
  std::vector<double> vb = b.block_values;
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());

  if (va.size() != vb.size()) {
    r.matched = false;
    r.detail = prefix + "value count mismatch: " + std::to_string(va.size()) + " vs " +
               std::to_string(vb.size());
    return r;
  }
  r.compared = va.size();
  std::size_t worst = 0;
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double dev = std::abs(va[i] - vb[i]);
    if (dev > r.max_deviation) {
      r.max_deviation = dev;
      worst = i;
    }
  }
  r.matched = prefix.empty() && r.max_deviation <= tol;
  if (!r.matched)
    r.detail = prefix + "worst pair " + fmt(va[worst]) + " vs " + fmt(vb[worst]) +
               " (deviation " + fmt(r.max_deviation) + ", tol " + fmt(tol) + ")";
  return r;
}

}  // namespace diracsl2
