#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cascade_noise {

// Full command-line driver, callable in-process for testing. `args` excludes
// the program name. Data goes to `out` (or --output), diagnostics to `err`.
// Returns 0 on success, 2 on usage/parse/validation errors, 1 on anything
// unexpected.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cascade_noise
