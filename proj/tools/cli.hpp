#pragma once

#include <ostream>

namespace localspec::cli {

/// Runs the command line. Data goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 2 on flag errors, 1 on numeric failure (and, for
/// `check`, on any failed invariant).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace localspec::cli
