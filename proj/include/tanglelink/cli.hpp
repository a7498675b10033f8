#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tanglelink {

/// Exit codes: 0 success, 1 usage or input error, 2 discrepancies reported.
/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tanglelink
