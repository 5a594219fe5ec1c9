#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asmlab::cli {

// Exit statuses.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace asmlab::cli
