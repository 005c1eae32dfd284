#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tait::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kInvalidInput = 2,
    kBudget = 3,
    kDisagreement = 4,
};

/// Runs `tait <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tait::cli
