#pragma once

#include <string>
#include <vector>

namespace fano::cli {

// Runs one subcommand. args excludes the program name.
// Exit codes: 0 success, 1 the run contradicts the expected index list
// (an elimination that did not eliminate), 2 usage error.
int run(std::vector<std::string> args);

}  // namespace fano::cli
