#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfgk {

/// Exit codes: 0 success, 1 diagnostics or a failed check, 2 resource cap.
int runCLI(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfgk
