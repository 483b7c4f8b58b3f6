#ifndef TORELLI_TOOLS_CLI_HPP_
#define TORELLI_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace torelli::cli {

  // Exit codes: 0 success, 1 domain error, 2 usage or parse error.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace torelli::cli

#endif  // TORELLI_TOOLS_CLI_HPP_
