#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ikdeg {

/// Entry point of the `ikdeg` command line tool. args excludes the program
/// name. Returns 0 on success, 1 when a verification or agreement check fails,
/// 2 for invalid parameters.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ikdeg
