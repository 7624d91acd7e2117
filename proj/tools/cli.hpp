#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wittflags::cli {

/// Runs `witt-flags` with the given arguments (program name excluded).
/// Returns the process exit code: 0 success, 1 selfcheck violation or
/// internal failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittflags::cli
