#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace repdet {

/// Run the command-line front end. `args` excludes the program name. Returns
/// the process exit status: 0 when all requested work and checks succeeded,
/// 1 when a verification check failed, nonzero on usage or parameter errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace repdet
