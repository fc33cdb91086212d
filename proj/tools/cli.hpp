#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidcx::tool {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitMismatch = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Same, with argv[0] supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidcx::tool
