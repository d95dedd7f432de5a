#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rpk {

/// Runs the command-line tool. Exit codes: 0 on success/PASS, 1 on a
/// semantic failure (FAIL verdict, unmet precondition, no witness), 2 on
/// input errors (unparseable files, bad tables, non-lattices, caps).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace rpk
