#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forbconf {

// Dispatches one command line. JSON result goes to out, diagnostics to err.
// Exit status: 0 ok, 1 domain "no" answers (e.g. pattern not found), 2 errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace forbconf
