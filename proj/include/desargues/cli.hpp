#pragma once

// Command-line front end. Each invocation prints one JSON document on `out`.
// Exit codes: 0 success, 1 verification failure (the report is still
// printed), 2 usage or input error (diagnostic on `err`).

#include <ostream>
#include <string>
#include <vector>

namespace desargues::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace desargues::cli
