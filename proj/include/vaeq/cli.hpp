#pragma once

#include <iosfwd>

namespace vaeq {

/// Full command-line surface of the vaeq tool. Returns the process exit
/// code: 0 success, 1 usage error, 2 computed infeasibility / precondition
/// failure / certification disagreement.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace vaeq
