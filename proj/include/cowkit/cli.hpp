#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cowkit::cli {

// Full command-line front end. Exit codes: 0 solved or YES, 1 NO (decision
// mode or failed verification), 2 usage or parse error, 3 unsolved (a
// configured limit was exceeded). JSON documents are only ever written
// complete.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace cowkit::cli
