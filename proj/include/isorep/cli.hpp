#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isorep::cli {

/// Exit codes: 0 success, 1 domain failure (report on `out`), 2 usage or
/// input error (message on `err`).
enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsageError = 2 };

/// Runs one `isorep` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace isorep::cli
