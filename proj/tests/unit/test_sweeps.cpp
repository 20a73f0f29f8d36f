#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "diracsl2/bundles.hpp"
#include "diracsl2/csv.hpp"
#include "diracsl2/sweeps.hpp"
#include "doctest.h"

using namespace diracsl2;

TEST_CASE("linspace") {
  const std::vector<double> v = linspace(-3.0, 3.0, 241);
  REQUIRE(v.size() == 241);
  CHECK(v.front() == -3.0);
  CHECK(v.back() == 3.0);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] > v[i - 1]);

  const std::vector<double> one = linspace(5.0, 9.0, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 5.0);

  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("indexed_map preserves order and policy equivalence") {
  const auto f = [](std::size_t i) { return static_cast<double>(i) * static_cast<double>(i); };
  const std::vector<double> serial = indexed_map<double>(1000, Exec::Serial, f);
  const std::vector<double> parallel = indexed_map<double>(1000, Exec::Parallel, f);
  REQUIRE(serial.size() == 1000);
  CHECK(serial == parallel);
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == f(i));

  const auto g = [](std::size_t i) { return "row-" + std::to_string(i); };
  CHECK(indexed_map<std::string>(64, Exec::Serial, g) ==
        indexed_map<std::string>(64, Exec::Parallel, g));

  CHECK(indexed_map<double>(0, Exec::Parallel, f).empty());
}

TEST_CASE("thread counts") {
  CHECK(max_threads(Exec::Serial) == 1);
  CHECK(max_threads(Exec::Parallel) >= 1);
}

TEST_CASE("a numeric kernel is bitwise policy-independent") {
  const std::vector<double> qs = linspace(-5.0, 5.0, 301);
  const auto kernel = [&](std::size_t i) {
    const double q = qs[i];
    return csv_row({format_double(omega(q)), format_double(epsilon(q)),
                    format_double(lambda_minus(2, q))});
  };
  const std::vector<std::string> a = indexed_map<std::string>(qs.size(), Exec::Serial, kernel);
  const std::vector<std::string> b = indexed_map<std::string>(qs.size(), Exec::Parallel, kernel);
  CHECK(a == b);
}
