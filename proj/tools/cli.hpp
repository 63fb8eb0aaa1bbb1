#ifndef CUTCX_CLI_HPP
#define CUTCX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cutcx::cli {

/// Exit codes: 0 success, 1 property violation found, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cutcx::cli

#endif
