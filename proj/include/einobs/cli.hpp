#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace einobs::cli {

// Runs one command line (args[0] is the program name). Returns 0 on
// success, 1 on domain errors, 2 on usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace einobs::cli
