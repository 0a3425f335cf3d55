#pragma once

#include <ostream>

namespace singulens {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificateFailure = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `singulens` tool, parameterized over the output streams so the
/// commands can be driven in-process.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace singulens
