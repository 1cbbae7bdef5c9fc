// Command line front end. run_cli is the whole program: the orecomp binary
// forwards argv, and the CLI tests call it with captured streams to pin the
// exact bytes of every format.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orecomp {

// args excludes the program name. Returns the process exit code: 0 on
// success, 2 on domain errors (bad input, empty classes, unsatisfiable
// requests), 3 on guard violations (enumerations over budget), and CLI11's
// usage codes for malformed flags. All successful output is deterministic:
// identical arguments produce identical bytes.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orecomp
