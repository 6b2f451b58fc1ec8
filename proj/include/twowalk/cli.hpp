#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twowalk {

// Exit codes: 0 success, 2 input parse error, 3 input not 2K2-free,
// 4 Hall failure (certificate emitted), 5 construction failed and fallback
// exhausted, 6 size limit exceeded. `verify` additionally exits 1 when the
// artifact fails verification.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twowalk
