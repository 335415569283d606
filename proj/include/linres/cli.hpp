#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linres {

// Command-line front end. Exit codes: 0 success, 1 domain errors (zero ideal
// where a table was requested, capacity exceeded, ...), 2 parse errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace linres
