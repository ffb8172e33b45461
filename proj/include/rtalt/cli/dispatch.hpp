#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtalt::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,  ///< accept, empty, or plain success
    kNegative = 1, ///< reject or nonempty
    kFailure = 2,  ///< usage, file or validation error
};

/// Runs one subcommand. `args` excludes the program name.
///
///   run <machine.json> <word> [--tree FILE]
///   enumerate <machine.json> --max-len L
///   emptiness <machine.json> [--bounded L]
///   compile-tm <tm.json> -o <out.json>
///   build <upower|twin|usquare-pa1ca|usquare-aqfa> -o <out.json>
///   check <machine.json>
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rtalt::cli
