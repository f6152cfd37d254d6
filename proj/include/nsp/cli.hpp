#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace nsp::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 when a verification suite disagrees with the known results and
/// 2 on usage or input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace nsp::cli
