#ifndef GWLINES_CLI_HPP
#define GWLINES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gwlines {

/// Exit codes: 0 success / all trials pass, 2 usage or schema error,
/// 3 degenerate input, 4 verification failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace gwlines

#endif
