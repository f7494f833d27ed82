#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agt {

// Command-line front end. Takes the arguments after the program name,
// streams results to out and diagnostics to err, and returns the process
// exit code: 0 on success, 1 when a verification subcommand found
// violations (or an enumeration was inconclusive), 2 on usage, argument,
// or input errors. Output is deterministic byte for byte for identical
// inputs.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace agt
