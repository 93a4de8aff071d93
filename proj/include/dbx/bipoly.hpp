#ifndef DBX_BIPOLY_HPP
#define DBX_BIPOLY_HPP

#include <dbx/numeric.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace dbx {

/// Exponent pair of the monomial X^x Y^y.
struct Monomial {
  unsigned x = 0;
  unsigned y = 0;

  constexpr unsigned total() const { return x + y; }
  friend constexpr bool operator==(Monomial, Monomial) = default;
};

/// Position of X^k Y^l in the graded order 1, Y, X, Y^2, XY, X^2, ...
constexpr std::uint64_t cantor(unsigned k, unsigned l) {
  const std::uint64_t s = std::uint64_t(k) + l;
  return (s * s + 3 * std::uint64_t(k) + l) / 2;
}

constexpr std::uint64_t cantor(Monomial m) { return cantor(m.x, m.y); }

/// Inverse of cantor().
Monomial cantor_inverse(std::uint64_t index);

/// Graded order with X > Y inside a degree; this is the cantor order and it
/// is a monomial order (compatible with multiplication).
struct CantorLess {
  constexpr bool operator()(Monomial a, Monomial b) const {
    if (a.total() != b.total()) return a.total() < b.total();
    return a.x < b.x;
  }
};

/// Sparse bivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, CantorLess>;

  BiPoly() = default;
  BiPoly(long c);  // NOLINT(google-explicit-constructor)
  BiPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  BiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(Monomial m, const Rational& c = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;

  Rational coeff(Monomial m) const;
  /// Largest monomial in cantor order. Requires a nonzero polynomial.
  Monomial leading_monomial() const;
  const Rational& leading_coeff() const;

  bool is_integral() const;
  /// max |coefficient|; requires integer coefficients.
  Integer height() const;
  /// Sum of |coefficients|; requires integer coefficients.
  Integer norm1() const;
  /// Positive rational c such that f / c is primitive with integer
  /// coefficients. Zero for the zero polynomial.
  Rational content() const;
  /// Primitive integer representative with positive leading coefficient.
  BiPoly normalized() const;

  BiPoly derivative_x() const;
  BiPoly derivative_y() const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  /// Evaluation at an integer point; requires integer coefficients.
  Integer evaluate_integer(const Integer& x, const Integer& y) const;
  /// f(X + x0, Y + y0).
  BiPoly shifted(const Integer& x0, const Integer& y0) const;

  /// Adds c * m in place.
  void add_term(Monomial m, const Rational& c);

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  BiPoly& operator/=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator*(BiPoly a, long c) { return a *= Rational(c); }
  friend BiPoly operator*(long c, BiPoly a) { return a *= Rational(c); }
  friend BiPoly operator/(BiPoly a, const Rational& c) { return a /= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Canonical expression syntax, terms in decreasing cantor order,
  /// e.g. "16*X^4*Y" or "X^2 + 3*X + 2".
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Integer power; negative exponents throw std::invalid_argument.
BiPoly pow(const BiPoly& base, long exponent);

/// Total order used for deterministic output: degree, then the leading
/// monomials in cantor order, then the coefficient sequences from the top.
bool canonical_less(const BiPoly& a, const BiPoly& b);

std::ostream& operator<<(std::ostream& os, const BiPoly& f);

}  // namespace dbx

#endif  // DBX_BIPOLY_HPP
