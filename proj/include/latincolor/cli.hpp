#pragma once

#include "latincolor/error.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace latincolor {

// 0 ok, 1 invalid certificate, 2 malformed input, 3 wrong group class,
// 4 internal consistency failure, 5 budget exhausted.
int exit_code_for(ErrorCode code);

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latincolor
