#ifndef MARO_CLI_HPP
#define MARO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace maro::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// code: 0 success, 1 check failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maro::cli

#endif  // MARO_CLI_HPP
