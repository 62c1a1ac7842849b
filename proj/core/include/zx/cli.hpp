#pragma once

#include <string>
#include <vector>

namespace zx::cli {

/// Run one command line (argv without the program name). Exit status:
/// 0 success / verified equal, 1 verified not-equal or failed checks,
/// 2 usage or runtime error.
int run(const std::vector<std::string>& args);

} // namespace zx::cli
