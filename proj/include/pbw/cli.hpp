#ifndef PBW_CLI_HPP
#define PBW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pbw::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kResourceGuard = 2, kPropertyFailure = 3 };

/// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbw::cli

#endif
