#pragma once

#include <ostream>

namespace acdc {

/// Full command-line entry point (subcommands: strip, recover, metrics,
/// bench), writing to the given streams instead of stdout/stderr so it can
/// be driven directly from tests. Returns the process exit code: 0 success,
/// 1 usage error, 2 IO or input-data error, 3 empty bench.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace acdc
