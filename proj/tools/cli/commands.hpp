#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcb::cli {

/// Runs the hcb command line with args (without the program name). JSON goes
/// to out, diagnostics and usage text to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcb::cli
