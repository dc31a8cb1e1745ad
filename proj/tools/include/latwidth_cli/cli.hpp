// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latwidth::cli {

// Process exit codes.
enum Exit : int {
  kOk = 0,
  kNone = 1,         // infeasible / empty / no solution
  kInputError = 2,   // parse errors, bad flags, failed preconditions, budget refusals
  kInternalError = 3 // invariant violations and verify mismatches
};

// Runs one command line (without the program name). Instance files named "-"
// are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace latwidth::cli
