#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kham {

// Runs one subcommand. `args` excludes the program name.
// Returns 0 on success or a decided negative, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kham
