#include <doctest.h>

#include <dbx/io.hpp>

#include "support.hpp"

using namespace dbx;
using namespace dbx::testing;

namespace {

ParseError poly_error(const std::string& text, bool allow_rational = false) {
  try {
    parse_polynomial(text, allow_rational);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no error for " << text);
  return ParseError(0, 0, "");
}

ParseError system_error(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no error for " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parse_polynomial") {
  CHECK(parse_polynomial("X^2 + 3*X + 2") == X * X + 3 * X + 2);
  CHECK(parse_polynomial("-2*X*Y - 3*Y - 1") == -2 * X * Y - 3 * Y - 1);
  CHECK(parse_polynomial("(X + Y)^3") == pow(X + Y, 3));
  CHECK(parse_polynomial("-(X - 1)*(Y + 1)") == -(X - 1) * (Y + 1));
  CHECK(parse_polynomial("  0 ") == BiPoly());
  CHECK(parse_polynomial("X^0") == BiPoly(1L));
  CHECK(parse_polynomial("123456789012345678901234567890*Y").to_string() == "123456789012345678901234567890*Y");
  CHECK(parse_polynomial("1/2*X + 3/4", true) == Rational(1, 2) * X + Rational(3, 4));
}

TEST_CASE("parse errors carry positions") {
  ParseError e = poly_error("X Y");
  CHECK(e.line() == 1);
  CHECK(e.column() == 3);
  CHECK(e.detail().find("implicit multiplication") != std::string::npos);
  e = poly_error("x + 1");
  CHECK(e.column() == 1);
  CHECK(e.detail().find("uppercase") != std::string::npos);
  e = poly_error("X/2");
  CHECK(e.detail().find("rational") != std::string::npos);
  CHECK(poly_error("1.5*X").detail().find("non-integer") != std::string::npos);
  CHECK(poly_error("(X + 1").detail().find("parenthesis") != std::string::npos);
  CHECK(poly_error("X + 1)").detail().find("parenthesis") != std::string::npos);
  CHECK(poly_error("X^99999").detail().find("exponent") != std::string::npos);
  CHECK(poly_error("(X^100)^100").detail().find("exponent") != std::string::npos);
  CHECK(poly_error("X +").line() == 1);
  CHECK(poly_error("").line() == 1);
  CHECK(std::string(poly_error("X Y").what()).rfind("line 1, column 3", 0) == 0);
}

TEST_CASE("parse_system") {
  ParsedSystem s = parse_system("A = X^2 + 3*X + 2\nB = -2*X*Y - 3*Y - 1");
  CHECK(s.derivation == gen_exponential_example(3));
  CHECK(s.warnings.empty());
  CHECK(parse_system("A = 3*X\nB = 2*Y\n").derivation == gen_linear_example(2));
  CHECK(parse_system("# linear\r\n\r\nB = 2*Y\r\nA = 3*X\r\n").derivation == gen_linear_example(2));
  s = parse_system("A = X*(X + Y)\nB = Y*(X + Y)\n");
  CHECK(s.derivation.a() == X);
  CHECK(s.derivation.b() == Y);
  REQUIRE(s.warnings.size() == 1);
  CHECK(s.warnings[0].find("X + Y") != std::string::npos);

  ParseError e = system_error("A = 3*X\nB = 2 Y\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 7);
  CHECK(system_error("A = X\n").detail().find("B") != std::string::npos);
  CHECK(system_error("A = X\nA = Y\nB = 1\n").line() == 2);
  CHECK(system_error("a = X\nB = Y\n").line() == 1);
  CHECK(system_error("A = 0\nB = 0\n").detail().find("zero") != std::string::npos);
  CHECK(system_error("A = X/2\nB = Y\n").detail().find("rational") != std::string::npos);
  CHECK(system_error("A X\nB = Y\n").line() == 1);
}

TEST_CASE("format_system round trip") {
  for (const Derivation& d : {fixture_a(), gen_linear_example(2), gen_exponential_example(5)}) {
    const std::string text = format_system(d);
    CHECK(parse_system(text).derivation == d);
  }
  CHECK(format_system(gen_linear_example(2)) == "A = 3*X\nB = 2*Y\n");
}

TEST_CASE("serialization round trip on 200 random polynomials") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    BiPoly f = random_poly(rng, int(uniform(rng, 0, 6)), 1000000);
    if (t % 3 == 0) f *= Rational(1, uniform(rng, 1, 50));
    if (t % 7 == 0) f *= BiPoly(Integer("98765432109876543210"));
    const std::string s = f.to_string();
    CHECK(parse_polynomial(s, true) == f);
    if (f.is_integral()) CHECK(parse_polynomial(s) == f);
  }
}
