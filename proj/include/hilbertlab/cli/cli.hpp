#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbertlab::cli {

/// Exit codes: 0 success, 1 bad invocation or input, 2 a numerical gate failed.
enum ExitCode : int { kOk = 0, kInputError = 1, kGateFailed = 2 };

/// Entry point of the hilbertlab binary. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbertlab::cli
