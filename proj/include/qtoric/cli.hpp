#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtoric {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitValidation = 2,
    kExitHypothesisUnmet = 3,
    kExitInconsistent = 4,
};

// Runs one command line (args exclude the program name). Reads piped input
// from `in` when a manifold path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qtoric
