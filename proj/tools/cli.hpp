// Command-line front end. Exit codes for decide: 0 yes, 1 no, 2 unknown,
// 3 other errors, 64 parse or usage errors, 65 exhausted budgets.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace relsyl::cli {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitError = 3;
constexpr int kExitParse = 64;
constexpr int kExitBudget = 65;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace relsyl::cli
