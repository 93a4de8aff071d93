#include <dbx/derivation.hpp>

#include <dbx/polyalg.hpp>

#include <stdexcept>

namespace dbx {

Derivation::Derivation(BiPoly a, BiPoly b, Mode mode) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() && b_.is_zero()) throw std::invalid_argument("derivation with A = B = 0");
  if (!a_.is_integral() || !b_.is_integral())
    throw std::invalid_argument("derivation components must have integer coefficients");
  BiPoly g = poly_gcd(a_, b_);
  if (!g.is_constant()) {
    if (mode == Mode::kStrict)
      throw std::invalid_argument("derivation components are not coprime (common factor " +
                                  g.to_string() + ")");
    a_ = *exact_divide(a_, g);
    b_ = *exact_divide(b_, g);
    removed_ = g;
  }
  degree_ = std::max(a_.total_degree(), b_.total_degree());
  height_ = std::max(a_.is_zero() ? Integer(0) : a_.height(), b_.is_zero() ? Integer(0) : b_.height());
}

std::string Derivation::fingerprint() const { return "A=" + a_.to_string() + ";B=" + b_.to_string(); }

BiPoly apply(const Derivation& d, const BiPoly& f) {
  BiPoly r = d.a() * f.derivative_x();
  r += d.b() * f.derivative_y();
  return r;
}

BiPoly iterate_apply(const Derivation& d, const BiPoly& f, unsigned k) {
  BiPoly r = f;
  for (unsigned i = 0; i < k && !r.is_zero(); ++i) r = apply(d, r);
  return r;
}

BiPoly divergence(const Derivation& d) { return d.a().derivative_x() + d.b().derivative_y(); }

Derivation shift_derivation(const Derivation& d, const Integer& x0, const Integer& y0) {
  return Derivation(d.a().shifted(x0, y0), d.b().shifted(x0, y0));
}

std::optional<DarbouxCertificate> cofactor_of(const Derivation& d, const BiPoly& f) {
  if (f.is_constant()) throw std::invalid_argument("cofactor_of: constant polynomial");
  BiPoly fn = f.normalized();
  auto g = exact_divide(apply(d, fn), fn);
  if (!g) return std::nullopt;
  if (g->total_degree() > d.degree() - 1)
    throw InternalInconsistency("cofactor degree exceeds d - 1 for " + fn.to_string());
  DarbouxCertificate c;
  c.f = std::move(fn);
  c.cofactor = std::move(*g);
  return c;
}

bool verify_certificate(const Derivation& d, const DarbouxCertificate& c) {
  return apply(d, c.f) == c.cofactor * c.f;
}

BiPoly exponential_example_integral(int k) {
  if (k < 2) throw std::invalid_argument("exponential example needs d >= 2");
  BiPoly prod(1L);
  for (int i = 1; i <= k - 1; ++i) prod *= BiPoly::x() + BiPoly(long(i));
  return BiPoly::y() * prod + BiPoly::x();
}

Derivation hamiltonian(const BiPoly& f) {
  return Derivation(f.derivative_y(), -f.derivative_x(), Derivation::Mode::kReduce);
}

Derivation gen_exponential_example(int k) {
  BiPoly f = exponential_example_integral(k);
  return Derivation(f.derivative_y(), -f.derivative_x());
}

Derivation gen_linear_example(int n) {
  if (n < 1) throw std::invalid_argument("linear example needs n >= 1");
  return Derivation(BiPoly::x() * Rational(n + 1), BiPoly::y() * Rational(n));
}

}  // namespace dbx
