#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace streamcheck {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,     // test fail, non-correspondence, counterexample
  kExitUsage = 2,       // usage, parse or type error, refusal
  kExitSimulation = 3,  // runtime simulation error
};

// Runs one invocation. `args` excludes the program name. Reads
// STREAMCHECK_COLOR from the environment.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace streamcheck
