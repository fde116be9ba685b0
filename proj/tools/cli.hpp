#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliffconn::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// args excludes the program name. Results go to `out` unless --out names a
// file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace cliffconn::cli
