#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamstar::cli {

enum ExitCode { kOk = 0, kCounterexample = 1, kUsage = 2 };

// Runs one invocation. `args` excludes the program name. Input named "-"
// (or absent for codec) is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hamstar::cli
