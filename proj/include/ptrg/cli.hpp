#pragma once

namespace ptrg {

// Dispatches the command line. Exit codes: 0 success, 1 usage error,
// 2 domain error (exceptional point, non-convergence, unwritable path).
int run_cli(int argc, const char* const argv[]);

}  // namespace ptrg
