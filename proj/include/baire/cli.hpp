#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace baire {

// Entry point of the `baire` tool; `args` excludes the program name. Returns
// 0 on success, 1 when a check or verification fails, 2 on usage or input
// errors. `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace baire
