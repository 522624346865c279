#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace delpezzo {

/// Command dispatch for the delpezzo tool. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`. Returns 0 on success or a
/// passing check, 1 when a check fails (reports are still printed), 2 on
/// usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace delpezzo
