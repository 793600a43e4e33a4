#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drchi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kDisagreement = 2,
};

/// Full command-line entry point. `args` excludes the program name. When no
/// matrix argument and no --batch file are given, the matrix is read from
/// `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace drchi::cli
