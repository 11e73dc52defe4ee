#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mckaylab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFail = 2;

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mckaylab::cli
