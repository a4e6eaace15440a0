#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "strippaths/verify.hpp"

namespace strippaths {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitDomain = 3 };

/// Replacement maps for `verify`, so tests can exercise the failure path.
struct CliHooks {
    PathMap a_to_b;
    PathMap b_to_a;
};

/// Runs one command line (without the program name). Data goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const CliHooks& hooks = {});

}  // namespace strippaths
