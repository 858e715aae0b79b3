#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmds {

/// Runs the command-line tool on the given arguments (program name
/// excluded) and returns the process exit code.
///
/// Exit codes, stable across subcommands:
///   0  success / verdict true
///   1  verdict false, uncorrectable, no completion, or a word off the code
///   2  usage, parse, or input errors
///   3  search budget exceeded
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmds
