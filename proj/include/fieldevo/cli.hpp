#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fieldevo {

/// Entry point of the `fieldevo` command line tool. `args[0]` is the program
/// name. Returns 0 on success, 1 on data errors, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fieldevo
