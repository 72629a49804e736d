#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace equigon {

// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMalformed = 1,
  kExitFailed = 2,    // verification failure / necessary condition false
  kExitNotFound = 3,  // search exhausted its bounds
};

// args excludes the program name. Reads stdin for `verify --in -`.
int run_cli(std::span<const std::string> args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace equigon
