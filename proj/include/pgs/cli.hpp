#pragma once

#include <ostream>

namespace pgs::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kResourceLimit = 3;

/// Runs one invocation of the `pgs` tool. Reads PGS_MAX_ORDER from the
/// environment; command-line flags take precedence.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgs::cli
