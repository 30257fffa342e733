#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipglue {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotEquivalent = 1,
  kExitUsage = 2,  // bad arguments, unreadable files, parse errors
  kExitSemantic = 3,
  kExitInternal = 4,  // a checked contract failed
};

// Runs one verb. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace bipglue
