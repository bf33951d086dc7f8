#pragma once

#include <string>
#include <vector>

namespace holodual {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// Run one CLI command (argv without the program name). Exit codes:
/// 0 = all checks pass, 1 = at least one check fails (report still
/// emitted), 2 = input/validation error.
CliResult cli_run(const std::vector<std::string>& args);

} // namespace holodual
