#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aniso {

/// Runs one CLI command; `args` excludes the program name. Returns the exit
/// code: 0 when every check passes, 2 on a failed check, 1 on bad input.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exactly what `bounds --table [--stable]` prints.
std::string boundsTableReport(bool stable);

}  // namespace aniso
