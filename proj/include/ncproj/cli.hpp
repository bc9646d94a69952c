#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncproj {

/// Run one command line (without the program name). Reports go to out,
/// diagnostics to err. Returns 0 on pass, 1 when a checked property fails
/// or a window cannot certify the request, 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncproj
