#pragma once

#include <iosfwd>

namespace wildmoduli::cli {

/// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input or usage,
/// 3 a numerical or domain failure inside the library.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kDomainError = 3 };

/// Parses argv, dispatches the command and writes its output. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wildmoduli::cli
