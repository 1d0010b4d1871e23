#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sds::cli {

/// Dispatch one command line (without argv[0]).  Returns the process exit
/// status: 0 on success, 1 on a verification/comparison failure, 2 on bad
/// usage, guard violations, or I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sds::cli
