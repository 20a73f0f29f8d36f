#pragma once

#include <string>
#include <vector>

namespace diracsl2 {

// Command-line front end on argv-style arguments (program name excluded).
// Subcommands: spectrum | line-sweep | helix | flow | cohomology | verify.
// Returns the process exit code: 0 success, 1 verification failure,
// 2 usage or validation error.  Grid sweeps evaluate in parallel; all output
// is assembled in index order and written single-threaded, so equal configs
// give byte-identical files.
int run_cli(const std::vector<std::string>& args);

}  // namespace diracsl2
