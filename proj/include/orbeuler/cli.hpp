#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orbeuler::cli {

/// Exit codes: 0 computed / inequality holds, 1 checker verdict negative
/// (violation, hypothesis not met, precondition failed), 2 invalid input.
enum ExitCode : int { kOk = 0, kNegativeVerdict = 1, kInvalidInput = 2 };

/// Maps a report verdict to its exit code; unknown verdicts are invalid input.
int exit_code_for(const std::string& verdict);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbeuler::cli
