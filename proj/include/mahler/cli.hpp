#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mahler {

// Exit codes: 0 success / PASS, 1 verification FAIL, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mahler
