#pragma once

// Command-line front end. Exit codes: 0 success / accept, 1 reject or
// failed invariant, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace lagsurf {

inline constexpr int kDefaultBlowupCap = 16;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagsurf
