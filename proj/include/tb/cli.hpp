#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tb::cli {

// Runs the command line. Exit codes: 0 success, 1 usage or parse errors,
// 2 domain errors (reported as a machine-readable error object).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace tb::cli
