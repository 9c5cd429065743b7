#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dv::cli {

// Runs one invocation of the `dv` tool. Exit code 0 = yes/success,
// 1 = definite no, 2 = usage, contract or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dv::cli
