#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace ringlab {

enum ExitCode { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitCap = 3 };

// args excludes the program name.  Reports go to `out`, usage errors to `err`.
// "-" as a file argument reads from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in = std::cin);

}  // namespace ringlab
