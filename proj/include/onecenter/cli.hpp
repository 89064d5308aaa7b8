#ifndef ONECENTER_CLI_HPP
#define ONECENTER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace onecenter {

// Subcommands: trace | verify | eval | plot | seb.
// Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 complexity guard.
// ONECENTER_SEED overrides the configured seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

} // namespace onecenter

#endif
