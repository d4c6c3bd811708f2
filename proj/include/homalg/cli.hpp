#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homalg::cli {

/// Exit statuses of run().
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsage = 2;

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homalg::cli
