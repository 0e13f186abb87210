#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flagmorph::cli {

/// Runs one CLI invocation. Returns the process exit code: 0 on success,
/// 1 when the input is rejected by the engine, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count for search parallelism: FLAGMORPH_THREADS when set (at least
/// 1), otherwise 1.
int worker_count_from_env();

}  // namespace flagmorph::cli
