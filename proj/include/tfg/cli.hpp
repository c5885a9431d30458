#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfg::cli {

/// Exit status: 0 positive verdict or success, 1 negative verdict,
/// 2 usage or internal error.
enum Exit : int { kPositive = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tfg::cli
