#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "diracsl2/cli.hpp"
#include "diracsl2/csv.hpp"
#include "doctest.h"

using namespace diracsl2;

namespace {

int run(const std::vector<std::string>& args) { return run_cli(args); }

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

struct TempFile {
  std::string path;
  explicit TempFile(std::string p) : path(std::move(p)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("spectrum sweep emits deterministic CSV") {
  TempFile tmp("tmp_cli_spectrum.csv");
  CHECK(run({"spectrum", "--q", "2", "--kmax", "1", "--tau-samples", "3", "--out", tmp.path}) == 0);
  const std::string payload = slurp(tmp.path);
  const std::vector<std::string> rows = lines(payload);
  REQUIRE(rows.size() == 13);  // header + 4 rows per sampled tau
  CHECK(rows[0] == "q,tau,k,branch,eigenvalue,multiplicity");

  // tau = 0: merged labels -1,+1 in (k, branch) order
  CHECK(split_csv_row(rows[1])[2] == "-1");
  CHECK(split_csv_row(rows[1])[3] == "minus");
  CHECK(split_csv_row(rows[3])[2] == "1");
  // tau = 1 wraps onto the canonical representative 0
  const std::vector<std::string> last = split_csv_row(rows[12]);
  CHECK(last[1] == "0");

  TempFile again("tmp_cli_spectrum_again.csv");
  CHECK(run({"spectrum", "--q", "2", "--kmax", "1", "--tau-samples", "3", "--out", again.path}) ==
        0);
  CHECK(slurp(again.path) == payload);  // byte-identical rerun
}

TEST_CASE("spectrum point query") {
  TempFile tmp("tmp_cli_spectrum_point.csv");
  CHECK(run({"spectrum", "--q", "0.5", "--tau", "0.5", "--kmax", "0", "--out", tmp.path}) == 0);
  const std::vector<std::string> rows = lines(slurp(tmp.path));
  REQUIRE(rows.size() == 3);
  const std::vector<std::string> minus = split_csv_row(rows[1]);
  const std::vector<std::string> plus = split_csv_row(rows[2]);
  CHECK(minus[4] == "-1");
  CHECK(plus[4] == "0");
  CHECK(minus[5] == "1");
}

TEST_CASE("spectrum usage failures exit 2") {
  CHECK(run({"spectrum", "--q", "0.1"}) == 2);
  CHECK(run({"spectrum", "--tau-samples", "1"}) == 2);
  CHECK(run({"spectrum", "--bogus"}) == 2);
  CHECK(run({"spectrum", "--tau", "0.5", "--tau-samples", "7"}) == 2);
  CHECK(run({}) == 2);
  CHECK(run({"frobnicate"}) == 2);
}

TEST_CASE("line-sweep rows and exact values") {
  TempFile tmp("tmp_cli_linesweep.csv");
  CHECK(run({"line-sweep", "--q-min", "-1", "--q-max", "1", "--samples", "3", "--kmax", "1",
             "--out", tmp.path}) == 0);
  const std::vector<std::string> rows = lines(slurp(tmp.path));
  REQUIRE(rows.size() == 13);
  CHECK(rows[0] == "q,label,eigenvalue");
  CHECK(split_csv_row(rows[1])[1] == "omega");
  CHECK(split_csv_row(rows[2])[1] == "epsilon");
  CHECK(split_csv_row(rows[3])[1] == "lambda-1");
  CHECK(split_csv_row(rows[4])[1] == "lambda+1");

  // q = 1 block: shortest round-trip formatting preserves the double exactly
  const std::vector<std::string> omega_row = split_csv_row(rows[9]);
  CHECK(omega_row[0] == "1");
  CHECK(parse_double(omega_row[2]) == 0.5 - std::sqrt(0.75));

  CHECK(run({"line-sweep", "--q-min", "2", "--q-max", "1"}) == 2);
}

TEST_CASE("helix chart output") {
  TempFile tmp("tmp_cli_helix.csv");
  CHECK(run({"helix", "--q", "0.25", "--kmax", "0", "--tau-samples", "5", "--out", tmp.path}) == 0);
  const std::vector<std::string> rows = lines(slurp(tmp.path));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "r,theta,z,k,branch");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(split_csv_row(rows[i])[0] == "1");
  // tau = 1/2 at the limit point: both branches sit at the coalesced value
  CHECK(split_csv_row(rows[5])[2] == "-0.5");
  CHECK(split_csv_row(rows[6])[2] == "-0.5");
  // tau = 1 wraps: identical rows to tau = 0
  CHECK(rows[9] == rows[1]);
  CHECK(rows[10] == rows[2]);
}

TEST_CASE("helix z agrees with spectrum eigenvalues") {
  TempFile hx("tmp_cli_helix_q2.csv");
  TempFile sp("tmp_cli_spectrum_q2.csv");
  CHECK(run({"helix", "--q", "2", "--kmax", "0", "--tau-samples", "11", "--out", hx.path}) == 0);
  CHECK(run({"spectrum", "--q", "2", "--tau", "0.3", "--kmax", "0", "--out", sp.path}) == 0);
  const std::vector<std::string> hrows = lines(slurp(hx.path));
  const std::vector<std::string> srows = lines(slurp(sp.path));
  // helix cell at tau = 0.3 is sample index 3: rows 7 (minus) and 8 (plus)
  const double z_minus = parse_double(split_csv_row(hrows[7])[2]);
  const double z_plus = parse_double(split_csv_row(hrows[8])[2]);
  const double e_minus = parse_double(split_csv_row(srows[1])[4]);
  const double e_plus = parse_double(split_csv_row(srows[2])[4]);
  CHECK(std::abs(z_minus - e_minus) <= 1e-12);
  CHECK(std::abs(z_plus - e_plus) <= 1e-12);
}

TEST_CASE("flow crossing table") {
  TempFile tmp("tmp_cli_flow.csv");
  CHECK(run({"flow", "--kmax", "1", "--samples", "101", "--out", tmp.path}) == 0);
  const std::vector<std::string> rows = lines(slurp(tmp.path));
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "label,q_cross,direction,net_flow");
  const std::vector<std::string> omega_row = split_csv_row(rows[1]);
  CHECK(omega_row[0] == "omega");
  CHECK(std::abs(parse_double(omega_row[1]) - 0.5) <= 1e-8);
  CHECK(omega_row[2] == "-1");
  CHECK(omega_row[3] == "-1");
  for (int i : {2, 3, 4}) {
    const std::vector<std::string> r = split_csv_row(rows[i]);
    CHECK(r[1].empty());
    CHECK(r[2].empty());
    CHECK(r[3] == "0");
  }
}

TEST_CASE("cohomology arc sweep") {
  TempFile tmp("tmp_cli_cohomology.csv");
  CHECK(run({"cohomology", "--samples", "5", "--out", tmp.path}) == 0);
  const std::vector<std::string> rows = lines(slurp(tmp.path));
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "q,tau,dimension,spinor_up,spinor_down");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(split_csv_row(rows[i])[2] == "1");
  const std::vector<std::string> mid = split_csv_row(rows[3]);
  CHECK(std::abs(parse_double(mid[0]) - 0.5) <= 1e-12);
  CHECK(std::abs(parse_double(mid[3]) - std::sqrt(0.5)) <= 1e-12);
  CHECK(std::abs(parse_double(mid[4]) + std::sqrt(0.5)) <= 1e-12);
}

TEST_CASE("cohomology point queries") {
  TempFile tmp("tmp_cli_cohomology_point.txt");
  CHECK(run({"cohomology", "--q", "2", "--tau", "0.1", "--out", tmp.path}) == 0);
  CHECK(slurp(tmp.path) == "dimension 0\n");

  CHECK(run({"cohomology", "--q", "0.5", "--tau", "0.5", "--out", tmp.path}) == 0);
  const std::vector<std::string> rows = lines(slurp(tmp.path));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "dimension 1");
  CHECK(rows[1].rfind("spinor ", 0) == 0);

  // discrete branch query takes no --tau
  CHECK(run({"cohomology", "--q", "0.1", "--out", tmp.path}) == 0);
  CHECK(slurp(tmp.path) == "dimension 0\n");

  CHECK(run({"cohomology", "--tau", "0.3"}) == 2);
  CHECK(run({"cohomology", "--q", "2"}) == 2);
  CHECK(run({"cohomology", "--q", "0.1", "--tau", "0.3"}) == 2);
}

TEST_CASE("svg format produces a self-contained image") {
  TempFile tmp("tmp_cli_spectrum.svg");
  CHECK(run({"spectrum", "--q", "2", "--kmax", "1", "--tau-samples", "5", "--format", "svg",
             "--out", tmp.path}) == 0);
  const std::string svg = slurp(tmp.path);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("eigenvalue") != std::string::npos);
}

TEST_CASE("verify subcommand wiring") {
  CHECK(run({"verify", "--suite", "determinism", "--points", "4"}) == 0);
  CHECK(run({"verify", "--suite", "nosuch"}) == 2);
  CHECK(run({"verify", "--suite", "oracle", "--points", "4", "--kmax", "2"}) == 0);
  // injected analytic bias must turn the comparisons red
  CHECK(run({"verify", "--suite", "oracle", "--points", "4", "--kmax", "2", "--perturb",
             "1e-3"}) == 1);
  CHECK(run({"verify", "--suite", "decomposition", "--kmax", "2", "--perturb", "1e-3"}) == 1);
}
