#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xcrs {

// Exit codes of the command line tool.
inline constexpr int exit_pass    = 0;
inline constexpr int exit_failure = 1;  // a checked law failed; the report names a witness
inline constexpr int exit_usage   = 2;  // usage, IO, parse or precondition error

// Runs one command; `args` excludes the program name. Reports go to `out`
// as plain text followed by a "--" line and key=value trailer lines;
// diagnostics go to `err`. Never throws.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace xcrs
