#ifndef BSYM_IO_HPP
#define BSYM_IO_HPP

#include <iosfwd>
#include <string>

#include "bsym/code.hpp"

namespace bsym {

/**
 * Matrix text format (bit-exact):
 *   first line  "p e rows cols"
 *   then `rows` lines of `cols` decimal element reprs, single spaces.
 *
 * Code file format: a leading line "generator" or "parity", then a matrix.
 */

std::string format_matrix(const FqMatrix& m);
/// Parse a matrix starting at the reader's position. ParseError on bad input.
FqMatrix parse_matrix(const std::string& text);

std::string format_code(const LinearCode& c);  // "generator" + canonical G
LinearCode parse_code(const std::string& text);

LinearCode load_code_file(const std::string& path);
FqMatrix load_matrix_file(const std::string& path);

}  // namespace bsym

#endif
