#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpc::cli {

enum ExitCode : int { kOk = 0, kUnsat = 1, kInputError = 2, kStuck = 3 };

/// Runs one `dpcolor` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dpc::cli
