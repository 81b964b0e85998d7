#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qx::cli {

/// Exit codes of the qx tool.
enum Exit : int { Ok = 0, CheckFailed = 1, Usage = 2, ResourceCap = 3 };

/// Runs `qx verify|build|homology ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qx::cli
