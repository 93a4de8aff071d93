#include <dbx/ratfirstint.hpp>

#include <dbx/extactic.hpp>
#include <dbx/factor.hpp>
#include <dbx/polyalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace dbx {

RatMatrix cofactor_map_matrix(const Derivation& d, const BiPoly& g, int n) {
  if (n < 0) throw std::invalid_argument("cofactor map: n must be nonnegative");
  if (g.total_degree() > d.degree() - 1) throw std::invalid_argument("cofactor degree exceeds d - 1");
  const std::size_t cols = std::size_t(n + 1) * (n + 2) / 2;
  const long top = long(n) + d.degree() - 1;
  const std::size_t rows = top < 0 ? 0 : std::size_t(top + 1) * (top + 2) / 2;
  RatMatrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    const BiPoly v = BiPoly::monomial(cantor_inverse(c));
    const BiPoly image = apply(d, v) - g * v;
    for (const auto& [mon, coef] : image.terms()) m(cantor(mon), c) = coef;
  }
  return m;
}

std::vector<BiPoly> kernel_of_cofactor_map(const Derivation& d, const BiPoly& g, int n) {
  std::vector<BiPoly> out;
  for (const auto& v : nullspace(cofactor_map_matrix(d, g, n))) {
    BiPoly f;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) f.add_term(cantor_inverse(i), Rational(v[i]));
    out.push_back(f.normalized());
  }
  return out;
}

bool verify_first_integral(const Derivation& d, const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw std::invalid_argument("verify_first_integral: q = 0");
  return (q * apply(d, p) - p * apply(d, q)).is_zero();
}

namespace {

Integer specialization_point(int i) { return (i % 2 == 1) ? Integer((i + 1) / 2) : Integer(-(i / 2)); }

PolyMatrix transformed(const PolyMatrix& m, bool swapped, const Integer& t0) {
  PolyMatrix out = m;
  for (auto& row : out)
    for (auto& e : row) {
      if (swapped) e = swap_variables(e);
      if (t0 != 0) e = e.shifted(t0, 0);
    }
  return out;
}

// A Darboux polynomial of D_k of degree exactly n dividing E_{n,0}(D_k), the
// canonically first one when there are several.
std::optional<DarbouxCertificate> degree_n_darboux_factor(const Derivation& dk, int n) {
  if (!extactic_nonzero_by_evaluation(dk, n, true)) return std::nullopt;
  const PolyMatrix m = extactic_matrix(dk, MonomialBasis::constant_free(n));
  const auto [bx, by] = determinant_degree_bounds(m);
  // expand in the variable of larger degree, keep the other one exact
  const bool swapped = by > bx;
  const int prec = 2 * n + 1;

  int reference = -1;
  for (long t : {3L, -2L, 5L}) {
    auto s = polynomial_determinant_series(transformed(m, swapped, Integer(t)), 1);
    if (s) reference = std::max(reference, (*s)[0].degree());
  }

  std::vector<DarbouxCertificate> found;
  auto to_original = [&](const BiPoly& h, const Integer& t0) {
    BiPoly f = h.shifted(-t0, 0);
    return (swapped ? swap_variables(f) : f).normalized();
  };
  bool searched = false;
  for (int i = 0; i < 8 && !searched; ++i) {
    const Integer t0 = specialization_point(i);
    auto series = polynomial_determinant_series(transformed(m, swapped, t0), prec);
    if (!series || (*series)[0].degree() != reference) continue;
    std::vector<DarbouxCertificate> local;
    auto accept = [&](const BiPoly& h) {
      const BiPoly f = to_original(h, t0);
      if (f.total_degree() != n) return false;
      auto cert = cofactor_of(dk, f);
      if (!cert) return false;
      local.push_back(*cert);
      return true;
    };
    try {
      if (!factors_from_series(*series, n, accept, false)) continue;
    } catch (const std::invalid_argument&) {
      continue;  // leading coefficient vanishes at t0 after all
    }
    found = std::move(local);
    searched = true;
  }

  // Factors in the expansion variable alone are invisible above. Such a
  // Darboux polynomial divides A (for X) or B (for Y), so only the factors
  // of that component need checking, against the full E_{n,0}.
  const BiPoly& comp = swapped ? dk.b() : dk.a();
  if (!comp.is_zero() && comp.total_degree() >= n) {
    std::optional<BiPoly> e;
    for (const auto& [f, mult] : factor_bivariate(comp).factors) {
      const bool pure = swapped ? f.degree_x() == 0 : f.degree_y() == 0;
      if (!pure || f.total_degree() != n) continue;
      if (!e) e = extactic_reduced(dk, n).poly;
      if (!exact_divide(*e, f)) continue;
      if (auto cert = cofactor_of(dk, f)) found.push_back(*cert);
    }
  }
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end(), [](const DarbouxCertificate& a, const DarbouxCertificate& b) {
    return canonical_less(a.f, b.f);
  });
}

std::optional<RationalFirstIntegral> shift_loop(const Derivation& d, int n, int bound) {
  const long side = long(bound) * bound * bound;
  const long cap = side * side;
  for (long idx = 0; idx < cap; ++idx) {
    const long xk = idx / side;
    const long yk = idx % side;
    const Derivation dk = shift_derivation(d, Integer(xk), Integer(yk));
    auto cert = degree_n_darboux_factor(dk, n);
    if (!cert) continue;
    const auto kernel = kernel_of_cofactor_map(dk, cert->cofactor, n);
    if (kernel.size() != 2)
      throw InternalInconsistency("kernel of the cofactor map has dimension " + std::to_string(kernel.size()));
    BiPoly p = kernel[0].shifted(Integer(-xk), Integer(-yk));
    BiPoly q = kernel[1].shifted(Integer(-xk), Integer(-yk));
    const BiPoly g = poly_gcd(p, q);
    if (!g.is_constant()) {
      p = *exact_divide(p, g);
      q = *exact_divide(q, g);
    }
    RationalFirstIntegral r;
    r.p = p.normalized();
    r.q = q.normalized();
    r.degree = std::max(r.p.total_degree(), r.q.total_degree());
    r.shift_used = {xk, yk};
    r.iterations = idx + 1;
    r.darboux_factor = cert->f;
    r.cofactor = cert->cofactor;
    if (!verify_first_integral(d, r.p, r.q)) throw InternalInconsistency("first integral failed verification");
    return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RationalFirstIntegral> rat_first_int(const Derivation& d, int n_max) {
  if (n_max < 1) throw std::invalid_argument("rat_first_int: N must be at least 1");
  if (extactic_nonzero_by_evaluation(d, n_max, false)) return std::nullopt;
  for (int n = 1; n <= n_max; ++n) {
    if (n < n_max && extactic_nonzero_by_evaluation(d, n, false)) continue;
    if (auto r = shift_loop(d, n, n_max)) return r;
    // the loop only fails when E_n != 0 after all
    if (extactic_vanishes(d, n)) throw InternalInconsistency("shift loop exceeded N^6 passes");
  }
  return std::nullopt;
}

}  // namespace dbx
