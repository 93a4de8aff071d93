#include <doctest.h>

#include <dbx/derivation.hpp>
#include <dbx/polyalg.hpp>

#include "support.hpp"

using namespace dbx;
using namespace dbx::testing;

TEST_CASE("constructor") {
  CHECK_THROWS_AS(Derivation(BiPoly(), BiPoly()), std::invalid_argument);
  CHECK_THROWS_AS(Derivation(X * Y, X * X), std::invalid_argument);
  CHECK_THROWS_AS(Derivation(X / Rational(2), Y), std::invalid_argument);
  const Derivation r(X * Y, X * X, Derivation::Mode::kReduce);
  CHECK(r.a() == Y);
  CHECK(r.b() == X);
  CHECK(r.removed_factor() == X);
  const Derivation a = fixture_a();
  CHECK(a.degree() == 2);
  CHECK(a.height() == 4);
  CHECK(Derivation(BiPoly(1L), BiPoly()).degree() == 0);
}

TEST_CASE("apply and iterate_apply") {
  const Derivation lin = gen_linear_example(2);
  CHECK(apply(lin, X * X - pow(Y, 3)) == 6 * X * X - 6 * pow(Y, 3));
  CHECK(apply(lin, BiPoly(7L)).is_zero());
  const Derivation a = fixture_a();
  CHECK(apply(a, Y) == 1 - 4 * X * Y);
  CHECK(iterate_apply(a, X, 2) == 8 * pow(X, 3));
  CHECK(iterate_apply(a, X * Y, 0) == X * Y);
  CHECK(iterate_apply(a, Y, 2) == -4 * X + 24 * X * X * Y);
}

TEST_CASE("cofactor_of") {
  const Derivation lin = gen_linear_example(2);
  auto c = cofactor_of(lin, X * X - pow(Y, 3));
  REQUIRE(c.has_value());
  CHECK(c->cofactor == BiPoly(6L));
  CHECK_FALSE(cofactor_of(fixture_a(), Y).has_value());
  c = cofactor_of(fixture_a(), X);
  REQUIRE(c.has_value());
  CHECK(c->cofactor == -2 * X);
  CHECK(verify_certificate(fixture_a(), *c));
  CHECK_THROWS_AS(cofactor_of(lin, BiPoly(3L)), std::invalid_argument);
}

TEST_CASE("divergence") {
  CHECK(divergence(gen_linear_example(2)) == BiPoly(5L));
  CHECK(divergence(gen_exponential_example(4)).is_zero());
  CHECK(divergence(hamiltonian(X * X * Y + pow(Y, 3) - X)).is_zero());
  CHECK(divergence(fixture_a()) == -8 * X);
}

TEST_CASE("shift_derivation") {
  const Derivation lin = gen_linear_example(2);
  CHECK(shift_derivation(lin, 0, 0) == lin);
  const Derivation s = shift_derivation(lin, 1, 0);
  CHECK(s.a() == 3 * X + 3);
  CHECK(s.b() == 2 * Y);
  const Derivation e = gen_exponential_example(3);
  for (long x0 : {-2L, 0L, 3L})
    for (long y0 : {-1L, 2L}) {
      const Derivation ds = shift_derivation(e, x0, y0);
      for (const BiPoly& f : {X + 1, X + 2, exponential_example_integral(3)}) {
        const auto c = cofactor_of(e, f);
        const auto cs = cofactor_of(ds, shift(f, x0, y0));
        REQUIRE(c.has_value());
        REQUIRE(cs.has_value());
        CHECK(cs->cofactor == shift(c->cofactor, x0, y0));
      }
      CHECK_FALSE(cofactor_of(ds, shift(X + Y, x0, y0)).has_value());
    }
}

TEST_CASE("generators") {
  Derivation e = gen_exponential_example(3);
  CHECK(e.a() == X * X + 3 * X + 2);
  CHECK(e.b() == -2 * X * Y - 3 * Y - 1);
  e = gen_exponential_example(2);
  CHECK(e.a() == X + 1);
  CHECK(e.b() == -Y - 1);
  CHECK(apply(gen_exponential_example(3), X + 1) == (X + 1) * (X + 2));
  CHECK_THROWS_AS(gen_exponential_example(1), std::invalid_argument);
  for (int k = 2; k <= 6; ++k) {
    const Derivation d = gen_exponential_example(k);
    CHECK(d.degree() == k - 1);
    CHECK(apply(d, exponential_example_integral(k)).is_zero());
    for (int i = 1; i < k; ++i) CHECK(cofactor_of(d, X + long(i)).has_value());
  }
  for (int n = 1; n <= 4; ++n) {
    const Derivation d = gen_linear_example(n);
    CHECK(d.a() == long(n + 1) * X);
    CHECK(d.b() == long(n) * Y);
    CHECK(cofactor_of(d, pow(X, n) - pow(Y, n + 1)).has_value());
    const BiPoly p = pow(X, n), q = pow(Y, n + 1);
    CHECK((q * apply(d, p) - p * apply(d, q)).is_zero());
  }
  CHECK_THROWS_AS(gen_linear_example(0), std::invalid_argument);
}

TEST_CASE("Leibniz rule and degree bound") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    const Derivation d = random_derivation(rng, 3, 20);
    const BiPoly f = random_poly(rng, 4, 20), g = random_poly(rng, 3, 20);
    CHECK(apply(d, f * g) == apply(d, f) * g + f * apply(d, g));
    if (!f.is_zero()) CHECK(apply(d, f).total_degree() <= f.total_degree() + d.degree() - 1);
  }
}

TEST_CASE("cofactor additivity on 200 random products") {
  struct Family {
    Derivation d;
    std::vector<BiPoly> polys;
  };
  std::vector<Family> families;
  families.push_back({fixture_a(), {X}});
  for (int n = 1; n <= 3; ++n)
    families.push_back({gen_linear_example(n), {X, Y, pow(X, n) - pow(Y, n + 1)}});
  for (int k = 3; k <= 5; ++k) {
    std::vector<BiPoly> ps;
    for (int i = 1; i < k; ++i) ps.push_back(X + long(i));
    ps.push_back(exponential_example_integral(k));
    ps.push_back(exponential_example_integral(k) + 3);
    families.push_back({gen_exponential_example(k), ps});
  }
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const Family& fam = families[std::size_t(uniform(rng, 0, long(families.size()) - 1))];
    BiPoly product(1L), expected;
    bool any = false;
    for (const auto& f : fam.polys) {
      const long e = uniform(rng, 0, 2);
      if (e == 0) continue;
      any = true;
      product *= pow(f, e);
      expected += cofactor_of(fam.d, f)->cofactor * e;
    }
    if (!any) {
      product = fam.polys[0];
      expected = cofactor_of(fam.d, fam.polys[0])->cofactor;
    }
    const auto c = cofactor_of(fam.d, product);
    REQUIRE(c.has_value());
    CHECK(c->cofactor == expected);
  }
}
