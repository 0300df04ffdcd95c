#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdm::cli {

// Command-line front end. `args` excludes the program name. Data goes to
// `out` (or the --out file), diagnostics to `err`. Returns 0 on success,
// 1 on verification/computation failure, 2 on invalid arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pdm::cli
