#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace msrlab::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kConstructionFailed = 3 };

/// Runs one verb. args excludes the program name. JSON reports go to out,
/// human-readable notes and errors to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msrlab::cli
