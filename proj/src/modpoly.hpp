#ifndef DBX_SRC_MODPOLY_HPP
#define DBX_SRC_MODPOLY_HPP

#include <dbx/numeric.hpp>
#include <dbx/upoly.hpp>

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dbx::detail {

using u64 = std::uint64_t;

// ---- polynomials over Z/p, p < 2^31 ----------------------------------------

using MP = std::vector<u64>;

inline void mp_trim(MP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline u64 mp_pow_scalar(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline u64 mp_inv_scalar(u64 a, u64 p) { return mp_pow_scalar(a, p - 2, p); }

inline MP mp_from(const UPolyZ& f, u64 p) {
  MP r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod_ui(f[i], p);
  mp_trim(r);
  return r;
}

inline UPolyZ mp_to_z(const MP& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (u64 v : a) c.push_back(from_u64(v));
  return UPolyZ(std::move(c));
}

inline MP mp_mul(const MP& a, const MP& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  MP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(r);
  return r;
}

inline MP mp_sub(MP a, const MP& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  mp_trim(a);
  return a;
}

inline MP mp_scale(MP a, u64 s, u64 p) {
  for (auto& v : a) v = v * s % p;
  mp_trim(a);
  return a;
}

inline void mp_divrem(const MP& a, const MP& b, u64 p, MP* q, MP* r) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  MP rem = a;
  const std::size_t db = b.size() - 1;
  MP quot(a.size() >= b.size() ? a.size() - db : 0, 0);
  const u64 inv = mp_inv_scalar(b.back(), p);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const u64 c = rem[k + db] * inv % p;
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] = (rem[k + i] + p - c * b[i] % p) % p;
  }
  mp_trim(rem);
  mp_trim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(rem);
}

inline MP mp_rem(const MP& a, const MP& b, u64 p) {
  MP r;
  mp_divrem(a, b, p, nullptr, &r);
  return r;
}

inline MP mp_quo(const MP& a, const MP& b, u64 p) {
  MP q;
  mp_divrem(a, b, p, &q, nullptr);
  return q;
}

inline MP mp_monic(MP a, u64 p) {
  if (a.empty()) return a;
  return mp_scale(std::move(a), mp_inv_scalar(a.back(), p), p);
}

inline MP mp_gcd(MP a, MP b, u64 p) {
  while (!b.empty()) {
    MP r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(std::move(a), p);
}

// s a + t b = 1 for coprime a, b; returns false when not coprime.
inline bool mp_bezout(const MP& a, const MP& b, u64 p, MP* s, MP* t) {
  MP r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    MP q, r;
    mp_divrem(r0, r1, p, &q, &r);
    r0 = std::move(r1);
    r1 = std::move(r);
    MP s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    MP t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) return false;
  const u64 inv = mp_inv_scalar(r0[0], p);
  *s = mp_scale(std::move(s0), inv, p);
  *t = mp_scale(std::move(t0), inv, p);
  return true;
}

inline MP mp_powmod(MP base, const Integer& e, const MP& m, u64 p) {
  MP r{1};
  base = mp_rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mp_rem(mp_mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mp_rem(mp_mul(r, base, p), m, p);
  }
  return r;
}

inline MP mp_derivative(const MP& a, u64 p) {
  if (a.size() <= 1) return {};
  MP r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  mp_trim(r);
  return r;
}

inline bool mp_less(const MP& a, const MP& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

/// The `count` largest primes below 2^31, in decreasing order.
inline std::vector<u64> word_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  u64 c = primes.empty() ? (u64(1) << 31) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    Integer z = from_u64(c);
    if (mpz_probab_prime_p(z.get_mpz_t(), 30) > 0) primes.push_back(c);
    c -= 2;
  }
  return primes;
}

}  // namespace dbx::detail

#endif  // DBX_SRC_MODPOLY_HPP
