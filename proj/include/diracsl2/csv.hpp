#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace diracsl2 {

// Shortest decimal form that round-trips the exact double (std::to_chars);
// zero is normalized to "0".  All CSV numbers go through this, which is what
// makes repeated runs byte-identical.
std::string format_double(double x);

// strict parse of the full string; throws std::invalid_argument on trailing junk
double parse_double(std::string_view s);

// joins with ',' and terminates with '\n'; fields must not contain commas
std::string csv_row(const std::vector<std::string>& fields);

std::vector<std::string> split_csv_row(std::string_view line);

}  // namespace diracsl2
