#pragma once

#include <stdexcept>
#include <string>

namespace montop {

/// Malformed or inconsistent input (bad file, unknown symbol, wrong alphabet).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard was exceeded (too many generators, poset too large, ...).
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the presentation and M-set parsers; carries a 1-based position.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Three-valued answer for questions that are only semi-decided.
enum class Decision { no, yes, unknown };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::no:
      return "false";
    case Decision::yes:
      return "true";
    case Decision::unknown:
      return "unknown";
  }
  return "unknown";
}

inline Decision decided(bool b) { return b ? Decision::yes : Decision::no; }

}  // namespace montop
