#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lyt::cli
{

/// Exit codes: 0 pass / success, 1 a mathematical check failed, 2 input or
/// usage error, 3 internal error.
enum ExitCode : int
{
    kPass = 0,
    kCheckFailed = 1,
    kInputError = 2,
    kInternalError = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace lyt::cli
