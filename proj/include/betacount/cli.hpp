#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betacount {

// Runs the command-line front end: count, maxsat, csp, order, check, gen.
// `args` excludes the program name. Reads '-' inputs from `in`, results go
// to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 input error, 2 not beta-acyclic, 3 internal
// invariant violation.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace betacount
