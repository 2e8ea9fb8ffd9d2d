#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cylvar {

// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

// Runs the driver on args (without the program name). Subcommands: energy, scan,
// binding, observables, entropy, compare2d, fit-tail, verify-appendix.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cylvar
