#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laqc::cli {

/// Runs one CLI command. Exit codes: 0 success, 1 physicality or tolerance
/// failure, 2 usage/parse error. The machine-readable document goes to `out`
/// (or the --output file), diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// argv-style entry point writing to stdout/stderr.
int run(int argc, const char* const* argv);

}  // namespace laqc::cli
