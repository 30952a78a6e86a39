#ifndef ROOMMATES_CLI_HPP
#define ROOMMATES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace roommates {

/// Runs the command-line tool on the given arguments (program name not
/// included). Exit status: 0 efficient / generic success, 1 inefficient,
/// 2 on any error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace roommates

#endif
