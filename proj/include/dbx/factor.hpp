#ifndef DBX_FACTOR_HPP
#define DBX_FACTOR_HPP

#include <dbx/bipoly.hpp>
#include <dbx/upoly.hpp>

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace dbx {

/// unit * prod f_i^e_i, factors primitive, normalized and irreducible over Q,
/// sorted by canonical_less.
struct Factorization {
  Rational unit{1};
  std::vector<std::pair<BiPoly, unsigned>> factors;

  BiPoly expand() const;
};

/// unit * prod s_i^i with the s_i squarefree, pairwise coprime, primitive.
/// Parts are listed by increasing multiplicity. Throws for f = 0.
Factorization squarefree_decompose(const BiPoly& f);

/// Factorization over Q of a univariate polynomial; factors are returned as
/// polynomials in X. Throws for f = 0.
Factorization factor_univariate(const UPolyQ& f);

/// Complete factorization over Q. Throws for constant f.
Factorization factor_bivariate(const BiPoly& f);

/// Irreducible factors of f (over Q) of total degree <= max_degree, without
/// multiplicities, sorted canonically. Factors of higher degree are not
/// computed, which keeps the cost low for large f.
std::vector<BiPoly> factors_up_to_degree(const BiPoly& f, int max_degree);

/// F(t, y) given only modulo t^prec as series[k] = coefficient of t^k, with
/// deg series[0] = deg_y F (F has integer coefficients). Returns the
/// irreducible factors of F of total degree <= max_degree that involve y, as
/// polynomials in (X = t, Y = y). Needs prec >= 2 max_degree + 1. The result
/// is complete for a generic specialization t = 0.
/// `accept` sees each candidate and decides whether it is kept; with
/// `complete` the last remaining group is returned as a factor as well.
/// nullopt when the specialization turns out to be degenerate.
std::optional<std::vector<BiPoly>> factors_from_series(const std::vector<UPolyZ>& series, int max_degree,
                                                       const std::function<bool(const BiPoly&)>& accept,
                                                       bool complete = false);

/// Number of absolutely irreducible factors of a squarefree nonconstant f.
/// Throws std::invalid_argument for non-squarefree or constant input.
unsigned count_absolute_factors(const BiPoly& f);

// ---- univariate integer tools ----------------------------------------------

/// Primitive gcd with positive leading coefficient, computed modulo primes.
UPolyZ univariate_gcd(const UPolyZ& a, const UPolyZ& b);

/// Squarefree parts (primitive, positive leading coefficient) with their
/// multiplicities, by increasing multiplicity.
std::vector<std::pair<UPolyZ, unsigned>> squarefree_univariate(const UPolyZ& f);

/// Irreducible factors over Z of a primitive squarefree f of positive degree,
/// each primitive with positive leading coefficient. With max_degree >= 0 only
/// the factors of degree <= max_degree are returned.
std::vector<UPolyZ> factor_squarefree_univariate(const UPolyZ& f, int max_degree = -1);

}  // namespace dbx

#endif  // DBX_FACTOR_HPP
