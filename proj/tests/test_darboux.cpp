#include <doctest.h>

#include <dbx/darboux.hpp>
#include <dbx/polyalg.hpp>

#include "support.hpp"

using namespace dbx;
using namespace dbx::testing;

namespace {

bool contains(const DarbouxReport& r, const BiPoly& f, const BiPoly& g) {
  for (const auto& c : r.certificates)
    if (c.f == f && c.cofactor == g) return true;
  return false;
}

void check_soundness(const Derivation& d, const DarbouxReport& r) {
  for (const auto& c : r.certificates) {
    CHECK(apply(d, c.f) == c.cofactor * c.f);
    CHECK(c.f.total_degree() <= r.degree_bound_used);
    if (!r.extactic.poly.is_zero()) CHECK(c.extactic_multiplicity == multiplicity_of(r.extactic.poly, c.f));
  }
  for (std::size_t i = 1; i < r.certificates.size(); ++i)
    CHECK(canonical_less(r.certificates[i - 1].f, r.certificates[i].f));
}

}  // namespace

TEST_CASE("fixture A") {
  const Derivation d = fixture_a();
  const DarbouxReport r = lagutinskii_pereira(d, 1);
  CHECK(r.outcome == DarbouxReport::Outcome::kFinite);
  REQUIRE(r.certificates.size() == 1);
  CHECK(r.certificates[0].f == X);
  CHECK(r.certificates[0].cofactor == -2 * X);
  CHECK(r.certificates[0].extactic_multiplicity == 4);
  CHECK(r.certificates[0].absolutely_irreducible == Tristate::kYes);
  CHECK_FALSE(contains(r, Y, BiPoly()));
  check_soundness(d, r);
  CHECK(r.extactic.poly == 16 * pow(X, 4) * Y);
  CHECK_THROWS_AS(lagutinskii_pereira(d, 0), std::invalid_argument);
}

TEST_CASE("linear fixture") {
  const Derivation d = gen_linear_example(2);
  DarbouxReport r = lagutinskii_pereira(d, 1);
  CHECK(r.outcome == DarbouxReport::Outcome::kFinite);
  CHECK(r.certificates.size() == 2);
  CHECK(contains(r, X, BiPoly(3L)));
  CHECK(contains(r, Y, BiPoly(2L)));
  check_soundness(d, r);
  r = lagutinskii_pereira(d, 3);
  CHECK(r.outcome == DarbouxReport::Outcome::kInfiniteFamily);
  CHECK(r.minimal_null_degree == 3);
  CHECK(r.extactic.poly.is_zero());
  r = lagutinskii_pereira(d, 2);
  CHECK(r.outcome == DarbouxReport::Outcome::kFinite);
  CHECK(r.certificates.size() == 2);
}

TEST_CASE("exponential family at N = 1") {
  for (int k = 3; k <= 5; ++k) {
    const Derivation d = gen_exponential_example(k);
    const DarbouxReport r = lagutinskii_pereira(d, 1);
    CHECK(r.outcome == DarbouxReport::Outcome::kFinite);
    check_soundness(d, r);
    for (int i = 1; i < k; ++i) {
      BiPoly g(1L);
      for (int j = 1; j < k; ++j)
        if (j != i) g *= X + long(j);
      CHECK(contains(r, X + long(i), g));
    }
    int x_only = 0;
    for (const auto& c : r.certificates)
      if (c.f.degree_y() == 0) ++x_only;
    CHECK(x_only == k - 1);
    CHECK_FALSE(r.threshold_reached);
  }
}

TEST_CASE("consistency with E_N and the threshold") {
  CHECK(darboux_count_threshold(2) == 5);
  CHECK(darboux_count_threshold(1) == 3);
  CHECK(darboux_count_threshold(4) == 12);
  CHECK_THROWS_AS(darboux_count_threshold(0), std::invalid_argument);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 8; ++t) {
    const Derivation d = random_derivation(rng, 2, 5);
    for (int n = 1; n <= 2; ++n) {
      const DarbouxReport r = lagutinskii_pereira(d, n);
      const bool zero = extactic_curve(d, n).poly.is_zero();
      CHECK((r.outcome == DarbouxReport::Outcome::kInfiniteFamily) == zero);
      CHECK(minimal_null_degree(d, n).has_value() == zero);
      check_soundness(d, r);
    }
  }
}

TEST_CASE("absolute factor annotation") {
  // X^2 + Y^2 is Darboux for the rotation field and splits over C.
  const Derivation rot(-Y, X);
  const DarbouxReport r = lagutinskii_pereira(Derivation(X - Y, X + Y), 2);
  check_soundness(Derivation(X - Y, X + Y), r);
  for (const auto& c : r.certificates)
    if (c.f == X * X + Y * Y) CHECK(c.absolute_factor_count == 2);
  CHECK(lagutinskii_pereira(rot, 2).outcome == DarbouxReport::Outcome::kInfiniteFamily);
}
