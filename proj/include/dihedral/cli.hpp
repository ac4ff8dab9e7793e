#pragma once

#include <string>
#include <vector>

#include "dihedral/verify.hpp"

namespace dihedral {

// Overrides the default parallelism for --jobs when set.
inline constexpr const char* jobs_env_var = "CAYLEYDIM_JOBS";

// 0 when the report has no disagreements, 2 otherwise (CI contract).
int exit_code_for(const verification_report& report);

// Entry point behind the cayleydim binary. `args` excludes the program name.
// Exit codes: 0 success, 1 invalid input, 2 verification disagreement.
int run_cli(const std::vector<std::string>& args);

}  // namespace dihedral
