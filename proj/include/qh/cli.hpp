#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qh {

// Exit codes of the command-line front end.
enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2 };

// Runs one command; args excludes the program name. Output is buffered and
// written once, to --out when given and to `out` otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "3" or "1..6".
std::pair<long, long> parse_n_range(const std::string& s);

}  // namespace qh
