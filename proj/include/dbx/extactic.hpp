#ifndef DBX_EXTACTIC_HPP
#define DBX_EXTACTIC_HPP

#include <dbx/bipoly.hpp>
#include <dbx/derivation.hpp>
#include <dbx/upoly.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dbx {

/// Monomials of degree <= N in cantor order, optionally without 1.
struct MonomialBasis {
  int degree = 0;
  bool include_constant = true;
  std::vector<Monomial> monomials;

  static MonomialBasis full(int n);
  static MonomialBasis constant_free(int n);
  std::size_t size() const { return monomials.size(); }
};

using PolyMatrix = std::vector<std::vector<BiPoly>>;

/// Entry (r, c) = D^r(v_c), r = 0..l-1.
PolyMatrix extactic_matrix(const Derivation& d, const MonomialBasis& basis);

struct ExtacticCurve {
  BiPoly poly;
  int n = 0;
  bool reduced = false;
  std::size_t basis_size = 0;
  std::string derivation_fingerprint;
};

/// E_N(D) with the cantor-ordered monomial basis. N >= 0.
ExtacticCurve extactic_curve(const Derivation& d, int n);

/// E_{N,0}(D): same determinant over the constant-free basis. N >= 1.
ExtacticCurve extactic_reduced(const Derivation& d, int n);

/// N l + (d - 1)(l - 1) l / 2 with l = (N + 1)(N + 2) / 2.
long degree_bound(int d, int n);
/// Same formula for an explicit basis length.
long degree_bound_for_length(int d, int n, long l);

/// (2 l H (l (d - 1) + N)^3)^(l (l - 1) / 2) with l = (N + 1)(N + 2) / 2.
Integer height_bound(int d, int n, const Integer& h);
Integer height_bound_for_length(int d, int n, const Integer& h, long l);

/// Exact determinant of a square matrix of integer polynomials, by
/// evaluation at integer grid points modulo word-size primes and
/// interpolation, with Chinese remaindering up to a Hadamard-type bound.
BiPoly polynomial_determinant(const PolyMatrix& m);

/// Upper bounds (deg_X, deg_Y) of det(m) from the entry degrees; -1 when a
/// row or column is zero.
std::pair<int, int> determinant_degree_bounds(const PolyMatrix& m);

/// det(m) modulo X^prec: element k is the coefficient of X^k, a polynomial
/// in Y. nullopt when the determinant vanishes at X = 0 (for every Y).
std::optional<std::vector<UPolyZ>> polynomial_determinant_series(const PolyMatrix& m, int prec);

/// Exact test E_N(D) = 0. A nonzero evaluation at one of a few
/// pseudo-random points settles the nonzero case; otherwise the full
/// determinant is computed.
bool extactic_vanishes(const Derivation& d, int n, bool reduced = false);

/// True when some of `trials` deterministic pseudo-random integer points
/// gives a nonzero exact determinant (so E is certainly nonzero).
bool extactic_nonzero_by_evaluation(const Derivation& d, int n, bool reduced, int trials = 5);

/// Smallest n <= N with E_n(D) = 0, or nullopt when E_N(D) != 0. N >= 1.
std::optional<int> minimal_null_degree(const Derivation& d, int n);

}  // namespace dbx

#endif  // DBX_EXTACTIC_HPP
