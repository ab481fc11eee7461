#ifndef AECC_CLI_COMMANDS_HPP
#define AECC_CLI_COMMANDS_HPP

#include <iosfwd>

namespace aecc::cli {

enum ExitCode : int { Ok = 0, Failed = 1, InvalidInput = 2 };

/// Entry point of the `aecc` tool. Subcommands:
///   h1       1-height of a constructed or user-supplied code
///   verify   bounds | trace | tightness | decoder | certificates | oracles
///   abft     demo | run
/// Returns 0 on success, 1 when a check fails or backends disagree, 2 on bad
/// input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aecc::cli

#endif  // AECC_CLI_COMMANDS_HPP
