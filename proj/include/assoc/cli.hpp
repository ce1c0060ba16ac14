#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace assoc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line. `args` excludes the program name. Array results go
// to `-o FILE` or to `out` in triple format; diagnostics go to `err`.
// Returns 0 on success, 1 on file/parse/domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace assoc::cli
