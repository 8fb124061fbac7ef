#ifndef TRICYCLIC_CLI_HPP
#define TRICYCLIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tricyclic {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Environment variable overriding the default spectral tolerance.
inline constexpr const char* kToleranceEnv = "TRICYCLIC_TOL";

/// Runs one command line (args excludes the program name). Graph-reading
/// subcommands take graph6 strings as positional arguments or, when none are
/// given, one per line from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace tricyclic

#endif // TRICYCLIC_CLI_HPP
