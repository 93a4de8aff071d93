#include <dbx/polyalg.hpp>

namespace dbx {

RecPoly to_recursive(const BiPoly& f) {
  if (f.is_zero()) return {};
  std::vector<std::vector<Integer>> rows(f.degree_x() + 1);
  const int dy = f.degree_y();
  for (auto& r : rows) r.assign(dy + 1, Integer(0));
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() != 1) throw std::domain_error("expected integer coefficients");
    rows[m.x][m.y] = c.get_num();
  }
  std::vector<UPolyZ> coeffs;
  coeffs.reserve(rows.size());
  for (auto& r : rows) coeffs.emplace_back(std::move(r));
  return RecPoly(std::move(coeffs));
}

BiPoly from_recursive(const RecPoly& f) {
  BiPoly r;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto& cy = f[i].coeffs();
    for (std::size_t j = 0; j < cy.size(); ++j)
      if (cy[j] != 0) r.add_term({unsigned(i), unsigned(j)}, Rational(cy[j]));
  }
  return r;
}

BiPoly from_univariate_x(const UPolyQ& f) {
  BiPoly r;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.add_term({unsigned(i), 0}, f[i]);
  return r;
}

BiPoly from_univariate_y(const UPolyQ& f) {
  BiPoly r;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.add_term({0, unsigned(i)}, f[i]);
  return r;
}

UPolyQ to_univariate_x(const BiPoly& f) {
  std::vector<Rational> c(f.degree_x() + 1, Rational(0));
  for (const auto& [m, v] : f.terms()) {
    if (m.y != 0) throw std::domain_error("polynomial depends on Y");
    c[m.x] = v;
  }
  return UPolyQ(std::move(c));
}

UPolyQ to_univariate_y(const BiPoly& f) {
  std::vector<Rational> c(f.degree_y() + 1, Rational(0));
  for (const auto& [m, v] : f.terms()) {
    if (m.x != 0) throw std::domain_error("polynomial depends on X");
    c[m.y] = v;
  }
  return UPolyQ(std::move(c));
}

UPolyZ to_integer_poly(const UPolyQ& f) {
  std::vector<Integer> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) {
    if (v.get_den() != 1) throw std::domain_error("expected integer coefficients");
    c.push_back(v.get_num());
  }
  return UPolyZ(std::move(c));
}

UPolyQ to_rational_poly(const UPolyZ& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return UPolyQ(std::move(c));
}

std::optional<BiPoly> exact_divide(const BiPoly& num, const BiPoly& den) {
  if (den.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  if (num.is_zero()) return BiPoly();
  const Monomial lm = den.leading_monomial();
  const Rational lc = den.leading_coeff();
  if (num.degree_x() < den.degree_x() || num.degree_y() < den.degree_y()) return std::nullopt;
  BiPoly rem = num;
  BiPoly quot;
  while (!rem.is_zero()) {
    const Monomial m = rem.leading_monomial();
    if (m.x < lm.x || m.y < lm.y) return std::nullopt;
    const Monomial qm{m.x - lm.x, m.y - lm.y};
    const Rational qc = rem.leading_coeff() / lc;
    quot.add_term(qm, qc);
    for (const auto& [dm, dc] : den.terms()) rem.add_term({dm.x + qm.x, dm.y + qm.y}, -qc * dc);
  }
  return quot;
}

BiPoly shift(const BiPoly& f, const Integer& x0, const Integer& y0) { return f.shifted(x0, y0); }

BiPoly swap_variables(const BiPoly& f) {
  BiPoly r;
  for (const auto& [m, c] : f.terms()) r.add_term({m.y, m.x}, c);
  return r;
}

unsigned multiplicity_of(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  if (g.is_constant()) throw std::invalid_argument("multiplicity of a constant");
  unsigned e = 0;
  BiPoly cur = f;
  while (auto q = exact_divide(cur, g)) {
    cur = std::move(*q);
    ++e;
  }
  return e;
}

}  // namespace dbx
