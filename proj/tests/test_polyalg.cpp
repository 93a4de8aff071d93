#include <doctest.h>

#include <dbx/linalg.hpp>
#include <dbx/polyalg.hpp>

#include "support.hpp"

using namespace dbx;
using namespace dbx::testing;

TEST_CASE("ring operations") {
  CHECK((X + Y) * (X - Y) == X * X - Y * Y);
  CHECK((X * Y + 3 * X) * BiPoly() == BiPoly());
  CHECK(pow(X + 1, 2) == X * X + 2 * X + 1);
  CHECK(pow(X, 0) == BiPoly(1L));
  CHECK_THROWS_AS(pow(X, -1), std::invalid_argument);
  CHECK((X - X).terms().empty());
  CHECK((X * X * Y).total_degree() == 3);
  CHECK(BiPoly().total_degree() == -1);
}

TEST_CASE("cantor order") {
  CHECK(cantor(0, 0) == 0);
  CHECK(cantor(0, 1) == 1);
  CHECK(cantor(1, 0) == 2);
  CHECK(cantor(0, 2) == 3);
  for (std::uint64_t i = 0; i < 200; ++i) CHECK(cantor(cantor_inverse(i)) == i);
  CHECK((16 * pow(X, 4) * Y).to_string() == "16*X^4*Y");
  CHECK((X * X + 3 * X + 2).to_string() == "X^2 + 3*X + 2");
}

TEST_CASE("exact_divide examples") {
  CHECK(*exact_divide(X * X - Y * Y, X - Y) == X + Y);
  CHECK_FALSE(exact_divide(X * X + 1, X).has_value());
  CHECK(*exact_divide(16 * pow(X, 4) * Y, pow(X, 4)) == 16 * Y);
  CHECK_THROWS_AS(exact_divide(X, BiPoly()), std::invalid_argument);
  CHECK(*exact_divide(BiPoly(), X) == BiPoly());
}

TEST_CASE("exact_divide on 500 random products") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    BiPoly a = random_poly(rng, int(uniform(rng, 0, 6)), 1000000, 0.4);
    BiPoly b = random_poly(rng, int(uniform(rng, 0, 6)), 1000000, 0.4);
    if (b.is_zero()) b = X + 1;
    const auto q = exact_divide(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    if (!b.is_constant()) CHECK_FALSE(exact_divide(a * b + 1, b).has_value());
  }
}

TEST_CASE("poly_gcd") {
  CHECK(poly_gcd(X * X - Y * Y, X * X + 2 * X * Y + Y * Y) == X + Y);
  CHECK(poly_gcd(Y, 1 - 4 * X * Y) == BiPoly(1L));
  CHECK(poly_gcd(-6 * X * Y - 4 * Y, BiPoly()) == 3 * X * Y + 2 * Y);
  CHECK_THROWS_AS(poly_gcd(BiPoly(), BiPoly()), std::invalid_argument);
  CHECK(poly_gcd(X * X + 3 * X + 2, -2 * X * Y - 3 * Y - 1) == BiPoly(1L));
  CHECK(poly_gcd((Y + 1) * (X + 2), (Y + 1) * (X - 3)) == Y + 1);
  CHECK(poly_gcd(6 * Y * Y * X + 6 * Y * Y, 4 * Y * X * X - 4 * Y) == Y * X + Y);
  const BiPoly big = 1000000007L * X * Y - 998244353L * Y * Y + 123456789L;
  CHECK(poly_gcd(big * (X - Y + 5), big * (X * X + Y)) == big);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const BiPoly a = random_poly(rng, 3, 9), b = random_poly(rng, 3, 9), c = random_poly(rng, 2, 9);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const BiPoly g = poly_gcd(a * c, b * c);
    CHECK(exact_divide(g, c.normalized()).has_value());
    CHECK(exact_divide(a * c, g).has_value());
    CHECK(exact_divide(b * c, g).has_value());
    CHECK(poly_gcd(c * a, c * b) == (c * poly_gcd(a, b)).normalized());
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const BiPoly a = random_poly(rng, 4, 50), b = random_poly(rng, 4, 50), c = random_poly(rng, 4, 50);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
  }
}

TEST_CASE("shift") {
  CHECK(shift(X * X, 1, 0) == X * X + 2 * X + 1);
  CHECK(shift(X * Y, 2, 3) == X * Y + 3 * X + 2 * Y + 6);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const BiPoly f = random_poly(rng, 5, 30);
    const long a = uniform(rng, -5, 5), b = uniform(rng, -5, 5), c = uniform(rng, -5, 5), d = uniform(rng, -5, 5);
    CHECK(shift(f, 0, 0) == f);
    CHECK(shift(shift(f, a, b), -a, -b) == f);
    CHECK(shift(shift(f, a, b), c, d) == shift(f, a + c, b + d));
    CHECK(shift(f, a, b).total_degree() == f.total_degree());
  }
}

TEST_CASE("multiplicity_of and swap_variables") {
  CHECK(multiplicity_of(16 * pow(X, 4) * Y, X) == 4);
  CHECK(multiplicity_of(16 * pow(X, 4) * Y, Y) == 1);
  CHECK(multiplicity_of(X + 1, Y) == 0);
  CHECK(swap_variables(X * X * Y + 3) == Y * Y * X + 3);
}

TEST_CASE("nullspace") {
  auto ns = nullspace(RatMatrix{{3, 2}});
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == IntVector{2, -3});
  CHECK(nullspace(RatMatrix{{1, 0}, {0, 1}}).empty());
  ns = nullspace(RatMatrix{{0, 0}, {0, 0}});
  REQUIRE(ns.size() == 2);
  CHECK(ns[0] == IntVector{1, 0});
  CHECK(ns[1] == IntVector{0, 1});
  std::mt19937_64 rng(1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = std::size_t(uniform(rng, 1, 6)), c = std::size_t(uniform(rng, 1, 7));
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = Rational(uniform(rng, -2, 2), uniform(rng, 1, 3));
        m(i, j).canonicalize();
      }
    const auto basis = nullspace(m);
    CHECK(basis.size() == c - rank(m));
    for (const auto& v : basis) {
      RatVector rv(v.begin(), v.end());
      for (const auto& x : m.apply(rv)) CHECK(x == 0);
    }
  }
}

TEST_CASE("solve_affine") {
  auto s = solve_affine(RatMatrix{{3, 2}}, RatVector{-5});
  REQUIRE(s.has_value());
  CHECK(3 * s->particular[0] + 2 * s->particular[1] == -5);
  REQUIRE(s->kernel.size() == 1);
  CHECK(s->kernel[0] == IntVector{2, -3});
  s = solve_affine(RatMatrix{{1, 0}, {0, 1}}, RatVector{0, 0});
  REQUIRE(s.has_value());
  CHECK(s->particular == RatVector{0, 0});
  CHECK(s->kernel.empty());
  CHECK_FALSE(solve_affine(RatMatrix{{0, 0}}, RatVector{1}).has_value());
  CHECK_THROWS_AS(solve_affine(RatMatrix{{1, 2}}, RatVector{1, 2}), std::invalid_argument);
}

TEST_CASE("bareiss_determinant") {
  CHECK(bareiss_determinant({1, 2, 3, 4}, 2) == -2);
  CHECK(bareiss_determinant({0, 1, 1, 0}, 2) == -1);
  CHECK(bareiss_determinant({2, 0, 0, 0, 3, 0, 0, 0, 4}, 3) == 24);
  CHECK(bareiss_determinant({1, 2, 2, 4}, 2) == 0);
}
