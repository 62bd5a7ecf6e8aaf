#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyolab::cli {

enum ExitCode { ok = 0, failure = 1, usage = 2, cap = 3, verification = 4 };

// Runs `polyolab <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyolab::cli
