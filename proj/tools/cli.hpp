#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bvl::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kSizeGuard = 3 };

/// Runs one command line (without the program name). Results go to `out`
/// as key=value lines, errors to `err` as `error: CODE message`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bvl::cli
