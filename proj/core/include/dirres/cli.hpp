#ifndef DIRRES_CLI_HPP_
#define DIRRES_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dirres {

// Command line surface. Subcommands:
//   resist | node-res | kirchhoff | kemeny | group | rdm | gen | scc | simulate
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dirres

#endif // DIRRES_CLI_HPP_
