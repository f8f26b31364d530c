#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbilat::cli {

// Exit status: 0 success/pass, 1 check failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbilat::cli
