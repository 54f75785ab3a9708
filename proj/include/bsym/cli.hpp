#ifndef BSYM_CLI_HPP
#define BSYM_CLI_HPP

#include <iosfwd>

namespace bsym {

/// Batch front end. Exit codes: 0 success, 1 usage error, 2 malformed input,
/// 3 cap exceeded, 4 internal invariant violation.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsym

#endif
