#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace referee {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainRejection = 1;
inline constexpr int kExitUsage = 2;

/// Entry point behind the `referee` binary. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace referee
