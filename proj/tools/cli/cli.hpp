#pragma once

#include <ostream>

namespace pfg::cli {

/// Exit codes of the pfg tool.
enum ExitCode : int { kOk = 0, kFalse = 1, kUsage = 2 };

/// Parses argv and runs one subcommand. Reports go to `out` as JSON (or CSV
/// for tables), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfg::cli
