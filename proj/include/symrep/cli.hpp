#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "symrep/checks.hpp"

namespace symrep::cli {

/// Exit status contract: 0 success / check passed, 1 check verdict failed,
/// 2 input or usage error.
int exit_code_for(const CheckReport& report);

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symrep::cli
