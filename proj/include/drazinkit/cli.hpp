#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drazinkit {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,        // success or confirmed property
    kExitRejected = 1,  // hypothesis not met, no inverse, budget exhausted
    kExitMalformed = 2, // unparsable flags or input
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to the --out path); every nonzero exit writes an error object to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace drazinkit
