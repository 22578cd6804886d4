#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glkinks {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,  // bad flags or model parameters
    exit_domain = 3, // poles, forbidden lambda
};

/// Runs the command line on `args` (program name excluded). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, shortest of %e/%f style, '.' separator.
std::string format_number(double x);

const char* version();

}  // namespace glkinks
