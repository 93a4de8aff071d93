#include <dbx/io.hpp>

#include <algorithm>
#include <cctype>
#include <optional>

namespace dbx {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

constexpr long kMaxDegree = 4096;

class Parser {
 public:
  Parser(std::string_view text, int line, int column_offset, bool allow_rational)
      : text_(text), line_(line), offset_(column_offset), allow_rational_(allow_rational) {}

  BiPoly parse() {
    skip_space();
    if (at_end()) fail("expected an expression");
    BiPoly p = expression();
    skip_space();
    if (!at_end() && peek() == ')') fail("unbalanced parenthesis");
    if (!at_end()) unexpected();
    return p;
  }

 private:
  BiPoly expression() {
    skip_space();
    BiPoly acc;
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    BiPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  BiPoly term() {
    BiPoly acc = power();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (c == '/') {
        if (!allow_rational_) fail("rational coefficients are not allowed, clear denominators first");
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer denominator");
        const std::size_t start = pos_;
        const Integer den = integer();
        if (den == 0) fail_at(start, "division by zero");
        acc *= Rational(Integer(1), den);
      } else if (starts_operand(c)) {
        fail("implicit multiplication is not allowed, write '*'");
      } else {
        break;
      }
    }
    return acc;
  }

  BiPoly power() {
    BiPoly base = primary();
    skip_space();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    if (peek() == '-') fail("exponents must be nonnegative integers");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    const std::size_t start = pos_;
    const Integer e = integer();
    if (e > kMaxDegree || Integer(std::max(base.total_degree(), 0)) * e > kMaxDegree)
      fail_at(start, "exponent overflow (degree limit " + std::to_string(kMaxDegree) + ")");
    return pow(base, e.get_si());
  }

  BiPoly primary() {
    skip_space();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer v = integer();
      if (peek() == '.') fail("non-integer literal");
      return BiPoly(Rational(v));
    }
    if (c == 'X' || c == 'Y') {
      ++pos_;
      if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        --pos_;
        fail("unknown identifier");
      }
      return c == 'X' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      BiPoly inner = expression();
      skip_space();
      if (peek() != ')') {
        if (at_end()) fail_at(open, "unbalanced parenthesis");
        unexpected();
      }
      ++pos_;
      return inner;
    }
    if (c == 'x' || c == 'y') fail(std::string("unknown variable '") + c + "', variables are uppercase X and Y");
    if (c == '.') fail("non-integer literal");
    if (at_end()) fail("unexpected end of expression");
    unexpected();
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  static bool starts_operand(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void unexpected() {
    fail(std::string("unexpected character '") + peek() + "'");
  }
  [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) {
    throw ParseError(line_, offset_ + static_cast<int>(pos) + 1, msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int offset_;
  bool allow_rational_;
};

bool integral(const BiPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (c.get_den() != 1) return false;
  return true;
}

}  // namespace

BiPoly parse_polynomial(std::string_view text, bool allow_rational) {
  return Parser(text, 1, 0, allow_rational).parse();
}

ParsedSystem parse_system(std::string_view text) {
  std::optional<BiPoly> a, b;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size() || line[i] == '#') continue;
    const char name = line[i];
    if (name != 'A' && name != 'B') {
      if (name == 'a' || name == 'b') throw ParseError(line_no, int(i) + 1, "component names are uppercase A and B");
      throw ParseError(line_no, int(i) + 1, "expected 'A =' or 'B ='");
    }
    std::size_t j = i + 1;
    while (j < line.size() && (line[j] == ' ' || line[j] == '\t')) ++j;
    if (j >= line.size() || line[j] != '=') throw ParseError(line_no, int(j) + 1, "expected '='");
    auto& slot = name == 'A' ? a : b;
    if (slot) throw ParseError(line_no, int(i) + 1, std::string("duplicate assignment to ") + name);
    slot = Parser(line.substr(j + 1), line_no, int(j) + 1, false).parse();
  }
  if (!a) throw ParseError(line_no, 1, "missing assignment to A");
  if (!b) throw ParseError(line_no, 1, "missing assignment to B");
  if (!integral(*a) || !integral(*b)) throw ParseError(1, 1, "non-integer coefficient");
  if (a->is_zero() && b->is_zero()) throw ParseError(1, 1, "zero system: A and B are both 0");
  Derivation d(*a, *b, Derivation::Mode::kReduce);
  ParsedSystem out{d, {}};
  if (d.removed_factor().total_degree() > 0)
    out.warnings.push_back("A and B share the factor " + d.removed_factor().to_string() + ", divided out");
  return out;
}

std::string format_system(const Derivation& d) {
  return "A = " + d.a().to_string() + "\nB = " + d.b().to_string() + "\n";
}

}  // namespace dbx
