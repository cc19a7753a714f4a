#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rootfield::cli {

/// Exit codes: 0 success / root found, 2 non-residue, 1 usage or computation error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_non_residue = 2;

/// Runs one invocation. `args` excludes the program name. Output depends only on `args`
/// and, when --seed is absent, the ROOTFIELD_SEED environment variable.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootfield::cli
