#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowrank::cli {

/// Runs one command. args excludes the program name. Returns 0 on success,
/// 1 on a domain error and 2 on malformed input; errors go to err as JSON.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lowrank::cli
