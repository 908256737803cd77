#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cbsg::cli {

// args excludes the program name. Exit codes: 0/1 per subcommand, 2 for
// malformed input, 3 when the body violates a precondition.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cbsg::cli
