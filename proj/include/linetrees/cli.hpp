#ifndef LINETREES_CLI_HPP
#define LINETREES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace linetrees::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. `args` excludes the program name. Exit codes:
/// 0 success, 1 domain error (bad sequence, malformed array, failed check),
/// 2 usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace linetrees::cli

#endif  // LINETREES_CLI_HPP
