#ifndef SYMPQ_CLI_HPP
#define SYMPQ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sympq {

// Exit codes: 0 success, 1 a verify/sweep found failures, 2 bad syntax,
// 3 domain errors (bounds, pole hits, unsupported sizes), 4 internal errors.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sympq

#endif
