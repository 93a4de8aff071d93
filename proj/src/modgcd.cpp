#include <dbx/factor.hpp>
#include <dbx/modular.hpp>
#include <dbx/polyalg.hpp>

#include "modpoly.hpp"

#include <climits>
#include <optional>
#include <random>
#include <stdexcept>

namespace dbx {

using namespace detail;

namespace {

u64 eval_mod(const MP& c, u64 y0, u64 p) {
  u64 v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = (v * y0 + c[i]) % p;
  return v;
}

// Coefficients of the polynomial of degree < n through (xs[i], vs[i]).
MP interpolate_mod(const std::vector<u64>& xs, const std::vector<u64>& vs, u64 p) {
  const std::size_t n = xs.size();
  std::vector<u64> dd = vs;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      const u64 num = (dd[i] + p - dd[i - 1]) % p;
      const u64 den = (xs[i] + p - xs[i - j]) % p;
      dd[i] = num * mp_inv_scalar(den, p) % p;
    }
  MP r{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // r = r * (y - xs[i]) + dd[i]
    MP next(r.size() + 1, 0);
    for (std::size_t k = 0; k < r.size(); ++k) {
      next[k + 1] = (next[k + 1] + r[k]) % p;
      next[k] = (next[k] + (p - xs[i]) % p * r[k]) % p;
    }
    next[0] = (next[0] + dd[i]) % p;
    r = std::move(next);
  }
  mp_trim(r);
  return r;
}

UPolyZ content_y(const RecPoly& f) {
  UPolyZ g;
  Integer ig = 0;
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    ig = int_gcd(ig, content(c));
    g = g.is_zero() ? primitive_part(c) : univariate_gcd(g, c);
  }
  return g.scaled(ig);
}

// Full gcd in Z[Y] (integer content included).
UPolyZ gcd_y(const UPolyZ& a, const UPolyZ& b) {
  return univariate_gcd(a, b).scaled(int_gcd(content(a), content(b)));
}

RecPoly divide_coefficients(const RecPoly& f, const UPolyZ& c) {
  std::vector<UPolyZ> out;
  for (const auto& x : f.coeffs()) out.push_back(x.is_zero() ? x : *try_exact_div(x, c));
  return RecPoly(std::move(out));
}

BiPoly from_y(const UPolyZ& c) {
  BiPoly r;
  for (int j = 0; j <= c.degree(); ++j) r.add_term({0, unsigned(j)}, Rational(c[j]));
  return r;
}

// gcd of A and B, primitive in X over Z[Y] with deg_X >= 1 each.
BiPoly primitive_gcd(const RecPoly& a, const RecPoly& b) {
  const UPolyZ gamma = gcd_y(a.lc(), b.lc());
  int ya = 0, yb = 0;
  for (const auto& c : a.coeffs()) ya = std::max(ya, c.degree());
  for (const auto& c : b.coeffs()) yb = std::max(yb, c.degree());
  const std::size_t npts = std::size_t(gamma.degree() + std::min(ya, yb) + 1);
  const BiPoly fa = from_recursive(a), fb = from_recursive(b);

  int best = INT_MAX;
  std::optional<mod::CrtAccumulator> crt;
  std::vector<Integer> previous;
  std::mt19937_64 rng(0x5eed);
  for (std::size_t pi = 0;; ++pi) {
    const u64 p = word_primes(pi + 1)[pi];
    std::vector<MP> ap, bp;
    for (const auto& c : a.coeffs()) ap.push_back(mp_from(c, p));
    for (const auto& c : b.coeffs()) bp.push_back(mp_from(c, p));
    const MP gp = mp_from(gamma, p);
    if (ap.back().empty() || bp.back().empty()) continue;
    int kp = INT_MAX;
    std::vector<u64> xs;
    std::vector<MP> vals;
    std::uniform_int_distribution<u64> pick(1, p - 1);
    while (xs.size() < npts) {
      const u64 y0 = pick(rng);
      if (std::find(xs.begin(), xs.end(), y0) != xs.end()) continue;
      if (eval_mod(ap.back(), y0, p) == 0 || eval_mod(bp.back(), y0, p) == 0) continue;
      MP ea(ap.size()), eb(bp.size());
      for (std::size_t i = 0; i < ap.size(); ++i) ea[i] = eval_mod(ap[i], y0, p);
      for (std::size_t i = 0; i < bp.size(); ++i) eb[i] = eval_mod(bp[i], y0, p);
      mp_trim(ea);
      mp_trim(eb);
      MP g = mp_gcd(ea, eb, p);
      const int k = int(g.size()) - 1;
      if (k == 0) return BiPoly(1L);
      if (k > kp) continue;
      if (k < kp) {
        kp = k;
        xs.clear();
        vals.clear();
      }
      xs.push_back(y0);
      vals.push_back(mp_scale(std::move(g), eval_mod(gp, y0, p), p));
    }
    if (kp > best) continue;
    if (kp < best) {
      best = kp;
      crt.emplace(std::size_t(kp + 1) * npts);
      previous.clear();
    }
    std::vector<u64> residues(std::size_t(kp + 1) * npts, 0);
    for (int i = 0; i <= kp; ++i) {
      std::vector<u64> vs(npts);
      for (std::size_t j = 0; j < npts; ++j) vs[j] = i < int(vals[j].size()) ? vals[j][std::size_t(i)] : 0;
      const MP c = interpolate_mod(xs, vs, p);
      for (std::size_t j = 0; j < c.size(); ++j) residues[std::size_t(i) * npts + j] = c[j];
    }
    crt->add(p, residues);
    auto cur = crt->symmetric();
    if (cur == previous) {
      BiPoly cand;
      for (int i = 0; i <= kp; ++i)
        for (std::size_t j = 0; j < npts; ++j) {
          const Integer& v = cur[std::size_t(i) * npts + j];
          if (v != 0) cand.add_term({unsigned(i), unsigned(j)}, Rational(v));
        }
      RecPoly rc = to_recursive(cand.normalized());
      const BiPoly g = from_recursive(divide_coefficients(rc, content_y(rc))).normalized();
      if (exact_divide(fa, g) && exact_divide(fb, g)) return g;
    }
    previous = std::move(cur);
  }
}

}  // namespace

BiPoly poly_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: both arguments are zero");
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (a.is_constant() || b.is_constant()) return BiPoly(1L);
  const RecPoly ra = to_recursive(a.normalized());
  const RecPoly rb = to_recursive(b.normalized());
  const UPolyZ ca = content_y(ra), cb = content_y(rb);
  const BiPoly c = from_y(univariate_gcd(ca, cb));
  const RecPoly pa = divide_coefficients(ra, ca), pb = divide_coefficients(rb, cb);
  if (pa.degree() == 0 || pb.degree() == 0) return c.normalized();
  return (c * primitive_gcd(pa, pb)).normalized();
}

}  // namespace dbx
