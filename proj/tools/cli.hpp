#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dessinkit::cli {

// Exit codes: 0 success or true, 1 a yes/no query answered no, 2 bad input, 3 resource limit.
// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dessinkit::cli
