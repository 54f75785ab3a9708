#ifndef BSYM_ERRORS_HPP
#define BSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsym {

/// Invalid argument or domain violation ("not prime", "zero inverse", ...).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed a configured cap.
class CapExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; carries 1-based line and column.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// A checked mathematical invariant failed; indicates an implementation bug.
class InvariantViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace bsym

#endif
