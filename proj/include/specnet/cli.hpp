#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specnet::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kInputError = 2,
    kNotConverged = 3,
};

/// Entry point shared by the `specnet` binary and the tests. `args` excludes
/// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specnet::cli
