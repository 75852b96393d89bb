// cli.hpp: entdyn command-line front end
//
// Subcommands: amplitude, dynamics, sweep, figure2. Data goes to --out or
// stdout, diagnostics to stderr. Exit codes: 0 ok, 2 usage, 3 numerical
// failure, 4 I/O failure.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entdyn::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitNumerical = 3, kExitIo = 4 };

// args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace entdyn::cli
