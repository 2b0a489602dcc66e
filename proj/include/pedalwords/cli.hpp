#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pedalwords::cli {

// Runs one invocation of the command-line tool. args excludes the program
// name. Exit codes, exhaustively: 0 success, 1 domain rejection (input parses
// but is outside the requested operation's domain, or a verification check
// fails), 2 usage or format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pedalwords::cli
