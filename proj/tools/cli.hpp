#ifndef RINGKIT_TOOLS_CLI_HPP
#define RINGKIT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ringkit::cli
{

// Runs one command (args excludes the program name). Returns the exit code:
// 0 success, 1 mathematical error, 2 usage or parse error.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace ringkit::cli

#endif
