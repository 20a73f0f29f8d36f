#include "diracsl2/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "diracsl2/bundles.hpp"
#include "diracsl2/cohomology.hpp"
#include "diracsl2/csv.hpp"
#include "diracsl2/errors.hpp"
#include "diracsl2/linalg.hpp"
#include "diracsl2/operators.hpp"
#include "diracsl2/param_space.hpp"
#include "diracsl2/spectral.hpp"
#include "diracsl2/svg.hpp"
#include "diracsl2/sweeps.hpp"
#include "diracsl2/verify.hpp"

namespace diracsl2 {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

int write_output(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    std::fflush(stdout);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) return usage_error("cannot open \"" + path + "\" for writing");
  file.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  file.flush();
  if (!file.good()) return usage_error("write to \"" + path + "\" failed");
  return kExitOk;
}

std::string branch_name(const SpectrumLabel& label) {
  switch (label.kind) {
    case SpectrumLabel::Kind::CoalescedLimit:
      return "coalesced";
    case SpectrumLabel::Kind::ExtremalDiscrete:
      return "extremal";
    default:
      return label.branch == Branch::Minus ? "minus" : "plus";
  }
}

std::string short_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

// parsed CSV body (header dropped), for the SVG projections
std::vector<std::vector<std::string>> csv_body(const std::string& payload) {
  std::vector<std::vector<std::string>> rows;
  std::size_t start = 0;
  bool header = true;
  while (start < payload.size()) {
    std::size_t end = payload.find('\n', start);
    if (end == std::string::npos) end = payload.size();
    const std::string_view line(payload.data() + start, end - start);
    if (!line.empty()) {
      if (header)
        header = false;
      else
        rows.push_back(split_csv_row(line));
    }
    start = end + 1;
  }
  return rows;
}

// ---------------------------------------------------------------- spectrum

struct SpectrumCfg {
  std::vector<double> qs{0.25, 0.5, 2.0};
  int kmax = 6;
  int tau_samples = 101;
  double tau = 0.0;
  bool tau_given = false;
  std::string format = "csv";
  std::string out;
};

std::string spectrum_svg(const std::string& csv) {
  // one series per (q, k, branch), eigenvalue against tau
  std::map<std::tuple<double, int, std::string>, SvgSeries> series;
  for (const auto& row : csv_body(csv)) {
    const double q = parse_double(row[0]);
    const double tau = parse_double(row[1]);
    const int k = static_cast<int>(parse_double(row[2]));
    const auto key = std::make_tuple(q, k, row[3]);
    auto [it, fresh] = series.try_emplace(key);
    if (fresh) it->second.label = "q=" + short_num(q) + " k=" + row[2] + " " + row[3];
    it->second.points.emplace_back(tau, parse_double(row[4]));
  }
  std::vector<SvgSeries> list;
  for (auto& [key, s] : series) list.push_back(std::move(s));
  return render_svg(list, "tau", "eigenvalue");
}

int cmd_spectrum(const SpectrumCfg& c) {
  for (double q : c.qs)
    if (!(q >= 0.25))
      return usage_error("spectrum covers the principal branch only: every --q must be >= 0.25");
  if (c.qs.empty()) return usage_error("spectrum needs at least one --q");
  if (c.kmax < 0) return usage_error("--kmax must be >= 0");
  if (!c.tau_given && c.tau_samples < 2) return usage_error("--tau-samples must be >= 2");

  std::vector<double> qs = c.qs;
  std::sort(qs.begin(), qs.end());
  const std::vector<double> taus =
      c.tau_given ? std::vector<double>{c.tau} : linspace(0.0, 1.0, c.tau_samples);

  const std::size_t cells = qs.size() * taus.size();
  const auto chunks = indexed_map<std::string>(cells, Exec::Parallel, [&](std::size_t idx) {
    const double q = qs[idx / taus.size()];
    const ParamPoint p = ParamPoint::principal(q, taus[idx % taus.size()]);
    LocalSpectrum spec = closed_form_spectrum(p, c.kmax);
    std::sort(spec.entries.begin(), spec.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                if (a.label.k != b.label.k) return a.label.k < b.label.k;
                return a.label.branch < b.label.branch;
              });
    std::string chunk;
    for (const SpectrumEntry& e : spec.entries)
      chunk += csv_row({format_double(q), format_double(p.tau()), std::to_string(e.label.k),
                        branch_name(e.label), format_double(e.eigenvalue),
                        std::to_string(e.multiplicity)});
    return chunk;
  });

  std::string payload = csv_row({"q", "tau", "k", "branch", "eigenvalue", "multiplicity"});
  for (const std::string& chunk : chunks) payload += chunk;
  if (c.format == "svg") payload = spectrum_svg(payload);
  return write_output(payload, c.out);
}

// -------------------------------------------------------------- line-sweep

struct LineSweepCfg {
  double q_min = -3.0;
  double q_max = 3.0;
  int samples = 241;
  int kmax = 3;
  std::string format = "csv";
  std::string out;
};

std::string line_sweep_svg(const std::string& csv) {
  std::map<std::string, SvgSeries> series;
  for (const auto& row : csv_body(csv)) {
    auto [it, fresh] = series.try_emplace(row[1]);
    if (fresh) it->second.label = row[1];
    it->second.points.emplace_back(parse_double(row[0]), parse_double(row[2]));
  }
  std::vector<SvgSeries> list;
  for (auto& [key, s] : series) list.push_back(std::move(s));
  return render_svg(list, "q", "eigenvalue");
}

int cmd_line_sweep(const LineSweepCfg& c) {
  if (!(c.q_min < c.q_max)) return usage_error("--q-min must be below --q-max");
  if (c.samples < 2) return usage_error("--samples must be >= 2");
  if (c.kmax < 0) return usage_error("--kmax must be >= 0");

  const std::vector<double> qs = linspace(c.q_min, c.q_max, c.samples);
  const auto chunks = indexed_map<std::string>(qs.size(), Exec::Parallel, [&](std::size_t i) {
    const double q = qs[i];
    std::string chunk;
    chunk += csv_row({format_double(q), "omega", format_double(omega(q))});
    chunk += csv_row({format_double(q), "epsilon", format_double(epsilon(q))});
    for (int k = 1; k <= c.kmax; ++k) {
      chunk += csv_row(
          {format_double(q), "lambda-" + std::to_string(k), format_double(lambda_minus(k, q))});
      chunk += csv_row(
          {format_double(q), "lambda+" + std::to_string(k), format_double(lambda_plus(k, q))});
    }
    return chunk;
  });

  std::string payload = csv_row({"q", "label", "eigenvalue"});
  for (const std::string& chunk : chunks) payload += chunk;
  if (c.format == "svg") payload = line_sweep_svg(payload);
  return write_output(payload, c.out);
}

// ------------------------------------------------------------------- helix

struct HelixCfg {
  std::vector<double> qs{0.25, 0.5, 2.0};
  int kmax = 0;
  int tau_samples = 101;
  std::string format = "csv";
  std::string out;
};

std::string helix_svg(const std::string& csv) {
  // z against theta, one series per (r, k, branch); r encodes the circle
  std::map<std::tuple<double, int, std::string>, SvgSeries> series;
  for (const auto& row : csv_body(csv)) {
    const double r = parse_double(row[0]);
    const int k = static_cast<int>(parse_double(row[3]));
    const auto key = std::make_tuple(r, k, row[4]);
    auto [it, fresh] = series.try_emplace(key);
    if (fresh) it->second.label = "r=" + short_num(r) + " k=" + row[3] + " " + row[4];
    it->second.points.emplace_back(parse_double(row[1]), parse_double(row[2]));
  }
  std::vector<SvgSeries> list;
  for (auto& [key, s] : series) list.push_back(std::move(s));
  return render_svg(list, "theta", "z");
}

int cmd_helix(const HelixCfg& c) {
  for (double q : c.qs)
    if (!(q >= 0.25))
      return usage_error("helix covers the principal branch only: every --q must be >= 0.25");
  if (c.qs.empty()) return usage_error("helix needs at least one --q");
  if (c.kmax < 0) return usage_error("--kmax must be >= 0");
  if (c.tau_samples < 2) return usage_error("--tau-samples must be >= 2");

  std::vector<double> qs = c.qs;
  std::sort(qs.begin(), qs.end());
  const std::vector<double> taus = linspace(0.0, 1.0, c.tau_samples);

  const std::size_t cells = qs.size() * taus.size();
  const auto chunks = indexed_map<std::string>(cells, Exec::Parallel, [&](std::size_t idx) {
    const double q = qs[idx / taus.size()];
    const ParamPoint p = ParamPoint::principal(q, taus[idx % taus.size()]);
    std::string chunk;
    for (int k = -c.kmax; k <= c.kmax; ++k) {
      const DenseMatrix blk = invariant_block(p, p.tau() + k);
      const Eigen2 eig = eigen2x2_sym(blk(0, 0), blk(1, 1), blk(0, 1));
      // the localized Dirac block is the negative, so its branches swap
      const double z_minus = -eig.values[1];
      const double z_plus = -eig.values[0];
      for (const auto& [z, name] : {std::pair{z_minus, "minus"}, std::pair{z_plus, "plus"}}) {
        const HelixCoordinates h = helix_coordinates(p, z);
        chunk += csv_row({format_double(h.r), format_double(h.theta), format_double(h.z),
                          std::to_string(k), name});
      }
    }
    return chunk;
  });

  std::string payload = csv_row({"r", "theta", "z", "k", "branch"});
  for (const std::string& chunk : chunks) payload += chunk;
  if (c.format == "svg") payload = helix_svg(payload);
  return write_output(payload, c.out);
}

// -------------------------------------------------------------------- flow

struct FlowCfg {
  double q_min = -50.0;
  double q_max = 50.0;
  int samples = 1001;
  int kmax = 10;
  std::string out;
};

int cmd_flow(const FlowCfg& c) {
  if (!(c.q_min < c.q_max)) return usage_error("--q-min must be below --q-max");
  if (c.samples < 2) return usage_error("--samples must be >= 2");
  if (c.kmax < 1) return usage_error("--kmax must be >= 1");

  struct Family {
    std::string label;
    std::function<double(double)> f;
  };
  std::vector<Family> families;
  families.push_back({"omega", [](double q) { return omega(q); }});
  families.push_back({"epsilon", [](double q) { return epsilon(q); }});
  for (int k = 1; k <= c.kmax; ++k) {
    families.push_back(
        {"lambda-" + std::to_string(k), [k](double q) { return lambda_minus(k, q); }});
    families.push_back(
        {"lambda+" + std::to_string(k), [k](double q) { return lambda_plus(k, q); }});
  }

  std::string report = "spectral flow of the block-operator eigenvalue curves over q in [" +
                       format_double(c.q_min) + ", " + format_double(c.q_max) + "], " +
                       std::to_string(c.samples) + " samples\n";
  std::string table = csv_row({"label", "q_cross", "direction", "net_flow"});
  int omega_flow = 0;

  for (const Family& fam : families) {
    SpectralFlowReport flow;
    try {
      flow = spectral_flow(fam.f, c.q_min, c.q_max, c.samples);
    } catch (const AmbiguousCrossing& e) {
      std::cerr << "error: " << fam.label << ": " << e.what() << "\n";
      return kExitVerification;
    } catch (const std::invalid_argument& e) {
      return usage_error(std::string(e.what()));
    }
    report += "  " + fam.label + ": net flow " + std::to_string(flow.net_flow);
    if (flow.crossings.empty()) {
      report += ", no zero crossings\n";
      table += csv_row({fam.label, "", "", std::to_string(flow.net_flow)});
    } else {
      report += "\n";
      for (const Crossing& cr : flow.crossings) {
        report += "    zero at q = " + format_double(cr.q) + ", direction " +
                  (cr.direction > 0 ? std::string("+1") : std::string("-1")) + "\n";
        table += csv_row({fam.label, format_double(cr.q),
                          cr.direction > 0 ? "1" : "-1", std::to_string(flow.net_flow)});
      }
    }
    if (fam.label == "omega") omega_flow = flow.net_flow;
  }

  report += "witness: distinguished curve net flow " + std::to_string(omega_flow) +
            " in the block convention, " + std::to_string(-omega_flow) +
            " for the localized Dirac curve (its negative)\n";
  std::fputs(report.c_str(), stdout);
  std::fflush(stdout);
  if (!c.out.empty()) return write_output(table, c.out);
  return kExitOk;
}

// -------------------------------------------------------------- cohomology

struct CohomologyCfg {
  double q = 0.0;
  double tau = 0.0;
  bool q_given = false;
  bool tau_given = false;
  int samples = 100;
  double tol = 1e-9;
  std::string format = "csv";
  std::string out;
};

std::string cohomology_svg(const std::string& csv) {
  SvgSeries arc{"arc", {}, true};
  SvgSeries up{"spinor_up", {}, true};
  SvgSeries down{"spinor_down", {}, true};
  for (const auto& row : csv_body(csv)) {
    const double tau = parse_double(row[1]);
    arc.points.emplace_back(tau, parse_double(row[0]));
    up.points.emplace_back(tau, parse_double(row[3]));
    down.points.emplace_back(tau, parse_double(row[4]));
  }
  return render_svg({arc, up, down}, "tau", "q / spinor");
}

int cmd_cohomology(const CohomologyCfg& c) {
  if (c.tau_given && !c.q_given) return usage_error("--tau needs --q (point query)");

  if (c.q_given) {
    CohomologyResult r{ParamPoint::limit_of_discrete_series(), 0, std::nullopt};
    if (c.tau_given) {
      if (!(c.q >= 0.25)) return usage_error("--tau applies to the principal branch (q >= 0.25)");
      r = dirac_cohomology(ParamPoint::principal(c.q, c.tau), c.tol);
    } else {
      if (!(c.q <= 0.25))
        return usage_error("point query at q > 0.25 needs --tau for the circle coordinate");
      r = dirac_cohomology(ParamPoint::discrete(c.q), c.tol);
    }
    std::string text = "dimension " + std::to_string(r.dimension) + "\n";
    if (r.spinor)
      text += "spinor " + format_double((*r.spinor)[0]) + " " + format_double((*r.spinor)[1]) +
              "\n";
    return write_output(text, c.out);
  }

  if (c.samples < 2) return usage_error("--samples must be >= 2");
  const double half_width = 1.0 / std::sqrt(8.0);
  const std::vector<double> taus = linspace(0.5 - half_width, 0.5 + half_width, c.samples);
  const auto chunks = indexed_map<std::string>(taus.size(), Exec::Parallel, [&](std::size_t i) {
    const double tau = taus[i];
    const double q = std::max(0.25, 2.0 * tau * (1.0 - tau));
    const ParamPoint p = ParamPoint::principal(q, tau);
    const CohomologyResult r = dirac_cohomology(p, c.tol);
    const double up = r.spinor ? (*r.spinor)[0] : 0.0;
    const double down = r.spinor ? (*r.spinor)[1] : 0.0;
    return csv_row({format_double(q), format_double(p.tau()), std::to_string(r.dimension),
                    format_double(up), format_double(down)});
  });

  std::string payload = csv_row({"q", "tau", "dimension", "spinor_up", "spinor_down"});
  for (const std::string& chunk : chunks) payload += chunk;
  if (c.format == "svg") payload = cohomology_svg(payload);
  return write_output(payload, c.out);
}

// ------------------------------------------------------------------ verify

struct VerifyCfg {
  std::vector<std::string> suites;
  int kmax = 8;
  double tol = 1e-9;
  std::uint64_t seed = 20250819ULL;
  int points = 200;
  double perturb = 0.0;
  bool serial = false;
};

int cmd_verify(const VerifyCfg& c) {
  verify::Options opt;
  opt.kmax = c.kmax;
  opt.tol = c.tol;
  opt.seed = c.seed;
  opt.sample_points = c.points;
  opt.perturb = c.perturb;
  opt.exec = c.serial ? Exec::Serial : Exec::Parallel;

  std::vector<verify::SuiteResult> results;
  try {
    results = verify::run_suites(c.suites.empty() ? verify::suite_names() : c.suites, opt);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  }

  int failed = 0;
  for (const verify::SuiteResult& r : results) {
    if (!r.passed) ++failed;
    std::printf("[%s] %-13s %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.detail.c_str(), r.seconds);
  }
  if (failed == 0)
    std::printf("all %zu suites passed\n", results.size());
  else
    std::printf("%d of %zu suites failed\n", failed, results.size());
  std::fflush(stdout);
  return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"localized Dirac spectra over the tempered dual of the universal cover of SL(2,R)"};
  app.name("diracsl2");
  app.require_subcommand(1);

  SpectrumCfg sp;
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "closed-form spectra over circles of the principal branch (CSV/SVG)");
  spectrum->add_option("--q", sp.qs, "circle radii as Casimir values, each >= 0.25")
      ->capture_default_str();
  spectrum->add_option("--kmax", sp.kmax, "largest spectral label emitted")->capture_default_str();
  auto* sp_samples =
      spectrum->add_option("--tau-samples", sp.tau_samples, "samples of the inclusive sweep [0, 1]")
          ->capture_default_str();
  spectrum->add_option("--tau", sp.tau, "single circle coordinate instead of a sweep")
      ->excludes(sp_samples);
  spectrum->add_option("--format", sp.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  spectrum->add_option("--out", sp.out, "output path (stdout when omitted)");

  LineSweepCfg ls;
  CLI::App* line_sweep = app.add_subcommand(
      "line-sweep", "eigenvalue curves along the real line through both branches (CSV/SVG)");
  line_sweep->add_option("--q-min", ls.q_min, "left end of the sweep")->capture_default_str();
  line_sweep->add_option("--q-max", ls.q_max, "right end of the sweep")->capture_default_str();
  line_sweep->add_option("--samples", ls.samples, "sample count, >= 2")->capture_default_str();
  line_sweep->add_option("--kmax", ls.kmax, "eigenline pairs per side")->capture_default_str();
  line_sweep->add_option("--format", ls.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  line_sweep->add_option("--out", ls.out, "output path (stdout when omitted)");

  HelixCfg hx;
  CLI::App* helix = app.add_subcommand(
      "helix", "spectra over circles in cylindrical chart coordinates r, theta, z (CSV/SVG)");
  helix->add_option("--q", hx.qs, "circle radii as Casimir values, each >= 0.25")
      ->capture_default_str();
  helix->add_option("--kmax", hx.kmax, "largest spectral label emitted")->capture_default_str();
  helix->add_option("--tau-samples", hx.tau_samples, "samples of the inclusive sweep [0, 1]")
      ->capture_default_str();
  helix->add_option("--format", hx.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  helix->add_option("--out", hx.out, "output path (stdout when omitted)");

  FlowCfg fl;
  CLI::App* flow = app.add_subcommand(
      "flow", "spectral flow of the eigenvalue curves; the K-theory witness report");
  flow->add_option("--q-min", fl.q_min, "left end of the family")->capture_default_str();
  flow->add_option("--q-max", fl.q_max, "right end of the family")->capture_default_str();
  flow->add_option("--samples", fl.samples, "uniform samples before bisection")
      ->capture_default_str();
  flow->add_option("--kmax", fl.kmax, "eigenline families to include")->capture_default_str();
  flow->add_option("--out", fl.out, "also write the crossing table as CSV");

  CohomologyCfg ch;
  CLI::App* cohomology = app.add_subcommand(
      "cohomology", "kernel locus of the localized operator: arc sweep or point query");
  auto* ch_q = cohomology->add_option("--q", ch.q, "point query: Casimir value");
  auto* ch_tau =
      cohomology->add_option("--tau", ch.tau, "point query: circle coordinate (principal branch)");
  cohomology->add_option("--samples", ch.samples, "arc sweep sample count")->capture_default_str();
  cohomology->add_option("--tol", ch.tol, "kernel detection tolerance")->capture_default_str();
  cohomology->add_option("--format", ch.format, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  cohomology->add_option("--out", ch.out, "output path (stdout when omitted)");

  VerifyCfg vf;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the verification suites; exit 0 iff all pass");
  verify_cmd
      ->add_option("--suite", vf.suites,
                   "suites to run by name, repeatable (default: all)")
      ->capture_default_str();
  verify_cmd->add_option("--kmax", vf.kmax, "truncation for the spectral suites")
      ->capture_default_str();
  verify_cmd->add_option("--tol", vf.tol, "eigenvalue agreement tolerance")->capture_default_str();
  verify_cmd->add_option("--seed", vf.seed, "random point seed")->capture_default_str();
  verify_cmd->add_option("--points", vf.points, "random points in the oracle suite")
      ->capture_default_str();
  verify_cmd->add_option("--perturb", vf.perturb,
                         "bias injected into the analytic side (harness self-test)")
      ->capture_default_str();
  verify_cmd->add_flag("--serial", vf.serial, "run sweeps on one thread");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  sp.tau_given = spectrum->count("--tau") > 0;
  ch.q_given = ch_q->count() > 0;
  ch.tau_given = ch_tau->count() > 0;

  try {
    if (app.got_subcommand(spectrum)) return cmd_spectrum(sp);
    if (app.got_subcommand(line_sweep)) return cmd_line_sweep(ls);
    if (app.got_subcommand(helix)) return cmd_helix(hx);
    if (app.got_subcommand(flow)) return cmd_flow(fl);
    if (app.got_subcommand(cohomology)) return cmd_cohomology(ch);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(vf);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }
  return usage_error("no subcommand selected");
}

}  // namespace diracsl2
