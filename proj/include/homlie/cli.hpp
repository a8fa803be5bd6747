#pragma once

// Command-line surface. Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <ostream>
#include <string>
#include <vector>

#include "homlie/report.hpp"

namespace homlie {

/// `args` excludes the program name. The report goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Report as JSON; witnesses are rendered with `names`. Compact unless `pretty`.
std::string report_to_json(const Report &r, const std::vector<std::string> &names, bool pretty = false);

} // namespace homlie
