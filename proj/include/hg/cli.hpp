#ifndef HG_CLI_HPP
#define HG_CLI_HPP

#include <iosfwd>

namespace hg {

// Exit codes: 0 = YES/ok, 1 = NO, 2 = usage or parse error, 3 = internal
// violation (a produced witness failed self-verification).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hg

#endif
