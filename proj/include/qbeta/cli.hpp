#ifndef QBETA_CLI_HPP
#define QBETA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qbeta {

/// Entry point of the command-line front end. Returns the process exit code:
/// 0 success, 1 verification failure, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qbeta

#endif
