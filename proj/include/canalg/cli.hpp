#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace canalg::cli {

// Runs one command; args excludes the program name.
// Exit codes: 0 ok, 1 a checked property failed, 2 invalid or out-of-range request.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace canalg::cli
