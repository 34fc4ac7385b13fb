#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffop {

// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or
// hypothesis error (parse failure, non-homogeneous f, d < 3, non-isolated
// singularity, bad flags).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace diffop
