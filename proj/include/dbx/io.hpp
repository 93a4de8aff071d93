#ifndef DBX_IO_HPP
#define DBX_IO_HPP

#include <dbx/bipoly.hpp>
#include <dbx/derivation.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dbx {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

/// Expression over integer literals, X, Y, + - * ^ and parentheses.
/// With allow_rational an integer literal may be followed by "/ <integer>",
/// which is what to_string produces for rational coefficients.
BiPoly parse_polynomial(std::string_view text, bool allow_rational = false);

struct ParsedSystem {
  Derivation derivation;
  std::vector<std::string> warnings;
};

/// Lines "A = <expr>" and "B = <expr>"; blank lines and lines starting with
/// '#' are ignored, CRLF is accepted. A common factor of A and B is divided
/// out with a warning.
ParsedSystem parse_system(std::string_view text);

/// "A = ...\nB = ...\n"
std::string format_system(const Derivation& d);

}  // namespace dbx

#endif  // DBX_IO_HPP
