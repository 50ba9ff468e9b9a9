#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `mtv` invocation. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mtv::cli
