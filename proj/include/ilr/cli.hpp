#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ilr {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;        // success
inline constexpr int kExitSemantic = 1;  // Fail / CheckFailed / ProofError / type errors
inline constexpr int kExitParse = 2;     // parse error
inline constexpr int kExitInternal = 3;  // step budget / iteration cap / bugs

/// Full command dispatch, callable in-process (argv without the program
/// name). Writes to the given streams and returns the exit code.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ilr
