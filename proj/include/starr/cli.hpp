#ifndef STARR_CLI_HPP
#define STARR_CLI_HPP

// Command-line front end: analyze | st | psi | free | lattice | coxeter | verify | search.
// Exit codes: 0 success, 1 a check failed or an internal inconsistency, 2 usage or parse error.

#include <ostream>
#include <string>
#include <vector>

namespace starr {

inline constexpr int kReportSchemaVersion = 1;

/// `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starr

#endif
