#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walkmom::cli {

inline constexpr int kExitOk = 0;            // all requested checks passed
inline constexpr int kExitVerifyFailed = 1;  // a verification did not hold
inline constexpr int kExitUsage = 2;         // bad flags or out-of-range parameters
inline constexpr int kExitIntegrity = 3;     // arithmetic-integrity abort

// Runs one subcommand. `args` excludes the program name. All machine output
// goes to `out`; diagnostics and the suppressible timing line go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace walkmom::cli
