#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccloops/coxeter.hpp"
#include "ccloops/morphism.hpp"

namespace ccl {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // I/O and command-line errors
  kExitCheckFailed = 2,
  kExitResourceLimit = 3,
  kExitParseError = 4,
};

struct RunConfig {
  std::string command;             // parse, group, loop, aut, cohomology, amalgams, verify
  std::string input_name = "-";    // echoed in reports
  int cap = kDefaultCap;           // group order limit
  std::int64_t budget = kDefaultBudget;  // search node limit
  bool strict = false;             // reject disconnected graphs
  bool cross_check = true;         // brute-force coefficient groups
  bool json = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // report, newline terminated
};

const std::vector<std::string>& command_names();

// Parses `input` and runs one command. Never throws for bad input or failed
// checks; those are reported through the exit code and the output.
RunResult run(const RunConfig& config, std::string_view input);

std::string sha256_hex(std::string_view data);

}  // namespace ccl
