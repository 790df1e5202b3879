#pragma once

// Batch driver behind the command-line tool: builds the requested algebra,
// runs one command and renders the result as text, JSON or CSV.

#include <cstdint>
#include <string>
#include <vector>

namespace hopfclass {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command;            // algebra | modules | fuse | table | verify | export
  std::vector<std::string> args;  // positional arguments after the command
  std::string family = "tensor-taft";
  int n = 3;
  std::string p = "0";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string output;             // empty or "-" for stdout
  std::string format = "text";    // text | json | csv
  std::string mode;               // fuse: closed | computed | both; table: closed | computed | crosscheck
  bool computed = false;          // ring targets evaluate in the computed table
  bool timing = false;            // include wall-clock seconds (breaks byte-identical output)
};

struct RunResult {
  int exit_code = 0;  // 0 all checks pass, 1 a check failed, 2 usage error
  std::string output;
};

/// Every name accepted by `verify`.
const std::vector<std::string>& verify_targets();

/// Never throws; usage errors come back with exit code 2 and a failure
/// report in the requested format.
RunResult run(const RunConfig& cfg);

/// Where `output` ends up: relative paths are resolved against
/// $HOPFCLASS_OUTPUT_DIR when it is set.  Empty for stdout.
std::string resolve_output_path(const std::string& output);

}  // namespace hopfclass
