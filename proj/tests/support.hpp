#ifndef DBX_TESTS_SUPPORT_HPP
#define DBX_TESTS_SUPPORT_HPP

#include <dbx/bipoly.hpp>
#include <dbx/derivation.hpp>
#include <dbx/linalg.hpp>
#include <dbx/polyalg.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace dbx::testing {

inline const BiPoly X = BiPoly::x();
inline const BiPoly Y = BiPoly::y();

inline Derivation fixture_a() { return Derivation(-2 * X * X, 1 - 4 * X * Y); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Dense-ish random integer polynomial of total degree <= deg.
inline BiPoly random_poly(std::mt19937_64& rng, int deg, long coeff, double density = 0.6) {
  BiPoly f;
  std::bernoulli_distribution keep(density);
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j)
      if (keep(rng)) f.add_term({unsigned(i), unsigned(j)}, Rational(uniform(rng, -coeff, coeff)));
  return f;
}

inline Derivation random_derivation(std::mt19937_64& rng, int deg, long coeff) {
  for (;;) {
    BiPoly a = random_poly(rng, deg, coeff), b = random_poly(rng, deg, coeff);
    if (std::max(a.total_degree(), b.total_degree()) < 1) continue;
    try {
      return Derivation(a, b);
    } catch (const std::invalid_argument&) {
    }
  }
}

/// Irreducible over Q by construction: a primitive linear form, or an
/// Eisenstein polynomial in X (or Y) at the prime p over Z[Y] (or Z[X]).
inline BiPoly random_irreducible(std::mt19937_64& rng, int max_degree, long coeff) {
  const int kind = int(uniform(rng, 0, max_degree - 1));
  if (kind == 0) {
    for (;;) {
      BiPoly f = uniform(rng, -coeff, coeff) * X + uniform(rng, -coeff, coeff) * Y + BiPoly(uniform(rng, -coeff, coeff));
      if (f.total_degree() == 1) return f.normalized();
    }
  }
  const int m = kind + 1;
  const long p = uniform(rng, 0, 1) ? 2 : 3;
  long c;
  do c = uniform(rng, 1, coeff); while (c % p == 0);
  BiPoly f = BiPoly::monomial({unsigned(m), 0}, c);
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j <= max_degree; ++j) {
      long v = p * uniform(rng, -coeff / p, coeff / p);
      if (i == 0 && j == 0)
        do v = p * uniform(rng, -coeff / p, coeff / p); while (v % (p * p) == 0);
      f.add_term({unsigned(i), unsigned(j)}, Rational(v));
    }
  if (uniform(rng, 0, 1)) f = swap_variables(f);
  return f.normalized();
}

/// Coefficient vector of f over the monomials of degree <= n (cantor order).
inline RatVector coefficients(const BiPoly& f, int n) {
  const std::size_t len = std::size_t(n + 1) * (n + 2) / 2;
  RatVector v(len);
  for (const auto& [m, c] : f.terms()) v[cantor(m)] = c;
  return v;
}

/// True when target lies in span{p, q} (exact rank test).
inline bool in_pencil(const BiPoly& p, const BiPoly& q, const BiPoly& target) {
  const int n = std::max({p.total_degree(), q.total_degree(), target.total_degree(), 0});
  const auto vp = coefficients(p, n), vq = coefficients(q, n), vt = coefficients(target, n);
  RatMatrix two(vp.size(), 2), three(vp.size(), 3);
  for (std::size_t i = 0; i < vp.size(); ++i) {
    two(i, 0) = three(i, 0) = vp[i];
    two(i, 1) = three(i, 1) = vq[i];
    three(i, 2) = vt[i];
  }
  return rank(two) == 2 && rank(three) == 2;
}

}  // namespace dbx::testing

#endif  // DBX_TESTS_SUPPORT_HPP
