#ifndef ONTOSIM_CLI_HPP
#define ONTOSIM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ontosim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontosim::cli

#endif  // ONTOSIM_CLI_HPP
