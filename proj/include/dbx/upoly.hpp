#ifndef DBX_UPOLY_HPP
#define DBX_UPOLY_HPP

#include <dbx/numeric.hpp>

#include <optional>
#include <tuple>
#include <type_traits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dbx {

/// Dense univariate polynomial, coefficient of x^i at index i; no trailing
/// zeros. R is Integer, Rational, or UPoly<Integer> (for Z[Y][X]).
template <class R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<R> c) : c_(std::move(c)) { trim(); }
  explicit UPoly(const R& constant) {
    if (!is_zero_elem(constant)) c_.push_back(constant);
  }

  static UPoly monomial(std::size_t degree, const R& c) {
    std::vector<R> v(degree + 1, R(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& lc() const { return c_.back(); }
  const R& operator[](std::size_t i) const { return c_[i]; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const std::vector<R>& coeffs() const { return c_; }
  std::vector<R>& mutable_coeffs() { return c_; }

  void trim() {
    while (!c_.empty() && is_zero_elem(c_.back())) c_.pop_back();
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero_elem(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scaled(const R& s) const {
    UPoly r = *this;
    for (auto& v : r.c_) v *= s;
    r.trim();
    return r;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<long>(i));
    return UPoly(std::move(r));
  }

  template <class V>
  V evaluate(const V& x) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

  /// Multiplication by x^k.
  UPoly shifted_up(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> r(k, R(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return UPoly(std::move(r));
  }

  static bool is_zero_elem(const R& v) {
    if constexpr (requires { v.is_zero(); }) {
      return v.is_zero();
    } else {
      return v == 0;
    }
  }

 private:
  std::vector<R> c_;
};

using UPolyZ = UPoly<Integer>;
using UPolyQ = UPoly<Rational>;

// ---- exact division helpers -------------------------------------------------

inline std::optional<Integer> try_exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
  return exact_quotient(a, b);
}

template <class R>
std::optional<R> try_exact_div_elem(const R& a, const R& b);

/// Exact division a / b in R[x]; nullopt when b does not divide a.
template <class R>
std::optional<UPoly<R>> try_exact_div(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return UPoly<R>();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<R> rem = a.coeffs();
  std::vector<R> q(a.degree() - b.degree() + 1, R(0));
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const R& top = rem[k + db];
    if (UPoly<R>::is_zero_elem(top)) continue;
    auto qk = try_exact_div_elem(top, b.lc());
    if (!qk) return std::nullopt;
    for (int i = 0; i <= db; ++i) rem[k + i] -= *qk * b[i];
    q[k] = std::move(*qk);
  }
  for (const auto& v : rem)
    if (!UPoly<R>::is_zero_elem(v)) return std::nullopt;
  return UPoly<R>(std::move(q));
}

template <class R>
std::optional<R> try_exact_div_elem(const R& a, const R& b) {
  if constexpr (std::is_same_v<R, Rational>) {
    return a / b;
  } else {
    return try_exact_div(a, b);
  }
}

template <class R>
R exact_div_elem(const R& a, const R& b) {
  auto q = try_exact_div_elem(a, b);
  if (!q) throw InternalInconsistency("expected exact division");
  return std::move(*q);
}

/// Quotient and remainder over a field.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divrem(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly<F>(), a};
  std::vector<F> rem = a.coeffs();
  std::vector<F> q(a.degree() - b.degree() + 1, F(0));
  const int db = b.degree();
  const F inv = F(1) / b.lc();
  for (int k = a.degree() - db; k >= 0; --k) {
    F qk = rem[k + db] * inv;
    if (qk == 0) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= qk * b[i];
    q[k] = qk;
  }
  return {UPoly<F>(std::move(q)), UPoly<F>(std::move(rem))};
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class R>
UPoly<R> pseudo_remainder(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    R top = rem[k];
    for (auto& v : rem) v *= b.lc();
    if (!UPoly<R>::is_zero_elem(top))
      for (int i = 0; i <= db; ++i) rem[k - db + i] -= top * b[i];
    rem.pop_back();
  }
  return UPoly<R>(std::move(rem));
}

// ---- gcd --------------------------------------------------------------------

template <class R>
R ring_gcd(const R& a, const R& b);

template <class R>
R content(const UPoly<R>& p) {
  R g(0);
  for (const auto& c : p.coeffs()) {
    g = ring_gcd(g, c);
    if constexpr (std::is_same_v<R, Integer>) {
      if (g == 1) break;
    } else {
      if (g.degree() == 0 && abs_value(g.lc()) == 1) break;
    }
  }
  return g;
}

/// Sign/unit normalization: leading coefficient positive (recursively).
template <class R>
bool leading_sign_negative(const R& v) {
  if constexpr (std::is_same_v<R, Integer>) {
    return v < 0;
  } else {
    return !v.is_zero() && leading_sign_negative(v.lc());
  }
}

template <class R>
UPoly<R> primitive_part(const UPoly<R>& p) {
  if (p.is_zero()) return p;
  R c = content(p);
  if (leading_sign_negative(p.lc())) c = -c;
  std::vector<R> v;
  v.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) v.push_back(exact_div_elem(x, c));
  return UPoly<R>(std::move(v));
}

/// Greatest common divisor in R[x] via the subresultant PRS, normalized
/// primitive with positive leading coefficient.
template <class R>
UPoly<R> subresultant_gcd(UPoly<R> a, UPoly<R> b) {
  auto unit_normal = [](UPoly<R> p) {
    if (!p.is_zero() && leading_sign_negative(p.lc())) p = -p;
    return p;
  };
  if (a.is_zero()) return unit_normal(std::move(b));
  if (b.is_zero()) return unit_normal(std::move(a));
  if (a.degree() < b.degree()) std::swap(a, b);
  R d = ring_gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  R g(1), h(1);
  for (;;) {
    const int delta = a.degree() - b.degree();
    UPoly<R> r = pseudo_remainder(a, b);
    if (r.is_zero()) return primitive_part(b) * UPoly<R>(d);
    if (r.degree() == 0) return UPoly<R>(d);
    a = std::move(b);
    R denom = g;
    for (int i = 0; i < delta; ++i) denom *= h;
    std::vector<R> nb;
    nb.reserve(r.coeffs().size());
    for (const auto& x : r.coeffs()) nb.push_back(exact_div_elem(x, denom));
    b = UPoly<R>(std::move(nb));
    g = a.lc();
    if (delta == 0) {
      // h unchanged
    } else {
      R num(1);
      for (int i = 0; i < delta; ++i) num *= g;
      R hd(1);
      for (int i = 0; i < delta - 1; ++i) hd *= h;
      h = exact_div_elem(num, hd);
    }
  }
}

template <class R>
R ring_gcd(const R& a, const R& b) {
  if constexpr (std::is_same_v<R, Integer>) {
    return int_gcd(a, b);
  } else {
    if (a.is_zero()) return leading_sign_negative(b) ? R(-b) : b;
    if (b.is_zero()) return leading_sign_negative(a) ? R(-a) : a;
    return subresultant_gcd(a, b);
  }
}

/// Monic gcd over a field.
template <class F>
UPoly<F> field_gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(F(1) / a.lc());
}

/// Extended Euclid over a field: returns (g, s, t) with s a + t b = g monic.
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> field_xgcd(UPoly<F> a, UPoly<F> b) {
  UPoly<F> s0(F(1)), s1, t0, t1(F(1));
  while (!b.is_zero()) {
    auto [q, r] = divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    UPoly<F> s2 = s0 - q * s1;
    UPoly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero()) return {a, s0, t0};
  F inv = F(1) / a.lc();
  return {a.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace dbx

#endif  // DBX_UPOLY_HPP
