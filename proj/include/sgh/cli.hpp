#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgh {

// Full command-line entry point (args exclude the program name).
// Returns the process exit code: 0 on success / all checks passing,
// 1 when a verification check fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgh
