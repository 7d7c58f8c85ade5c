#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snakealg::cli {

// Runs one command (args exclude the program name) and writes to the given
// streams. Exit codes: 0 success, 1 parse/usage error, 2 domain error,
// 3 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace snakealg::cli
