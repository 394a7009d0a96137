#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabscope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

/// One invocation of the command-line tool; `args` excludes the program
/// name. Payloads go to `out`; failures print one JSON line {"error": ...}
/// to `err`. Exit codes: 0 ok, 1 computation error, 2 usage or parse error,
/// 3 an Unknown verdict under --strict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabscope::cli
