#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace timmp {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitInternal = 1;

/// Runs one subcommand. `args` excludes the program name. Errors are reported
/// on `err` as a single line "timmp: error: <code>: <message>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace timmp
