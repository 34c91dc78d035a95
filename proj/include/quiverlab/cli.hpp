#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quiverlab/adjunction.hpp"

namespace quiverlab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitLawFailure = 1,  // a law or validation check failed
  kExitUsage = 2,       // bad arguments, unreadable or malformed input
  kExitCapExceeded = 3,
};

/// One line per law ("PASS"/"FAIL"), failure witnesses indented below, then
/// a summary line. With `verbose`, all recorded failures are listed.
std::string format_law_report(const LawReport& report, bool verbose = false);

/// Runs the tool. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiverlab
