#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faro::cli {

// Runs one faro command. `args` is argv without the program name.
// Exit codes: 0 success, 2 usage error, 3 internal cross-check failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace faro::cli
