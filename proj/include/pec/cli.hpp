// The `pec` command line, callable in-process for testing.

#ifndef PEC_CLI_HPP_
#define PEC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pec::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;     // usage, syntax and I/O problems
inline constexpr int kSemanticError = 2;  // invalid domain, zero condition, ...

/// Runs `pec` with `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pec::cli

#endif  // PEC_CLI_HPP_
