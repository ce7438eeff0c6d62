#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fvkit {

enum ExitCode { kExitOk = 0, kExitViolation = 1, kExitUsage = 2, kExitCap = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fvkit
