#ifndef RANKONE_CLI_HPP
#define RANKONE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace rankone::cli {

/// Process exit codes; each outcome class maps to exactly one code.
enum ExitCode : int {
  kOk = 0,                  ///< feasible / solved / all representatives agree
  kInfeasible = 2,
  kNotSplit = 3,
  kParseError = 4,          ///< unreadable problem file or bad command line
  kVerificationFailed = 5,
  kDisagreement = 6,        ///< oracle and feasibility predicate differ
  kBudgetExceeded = 7,
};

/// Runs `rankone <args...>` (args exclude the program name), writing results
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankone::cli

#endif  // RANKONE_CLI_HPP
