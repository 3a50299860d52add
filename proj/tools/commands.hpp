#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace divisive::cli {

enum ExitCode : int { kOk = 0, kUsageError = 2, kRuntimeError = 3 };

/// Runs the command line `args` (without the program name). Tables go to
/// `out`, diagnostics to `err`. `stop`, when set, interrupts experiments.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::atomic<bool>* stop = nullptr);

}  // namespace divisive::cli
