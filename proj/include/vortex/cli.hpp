#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vortex::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitConfig = 2,
  kExitNotConverged = 3,
};

/// Entry point of the `vortexoam` tool. `args` excludes the program name.
/// Records go to `out` (or to --out / $VORTEX_OUTPUT), messages to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace vortex::cli
