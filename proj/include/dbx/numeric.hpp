#ifndef DBX_NUMERIC_HPP
#define DBX_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace dbx {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an algorithm detects a state its correctness argument rules
/// out (e.g. a kernel of the wrong dimension). Never expected in practice.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline Integer int_gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Exact quotient; caller guarantees b | a.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Nonnegative residue of a modulo p (unsigned long is 64-bit on the
/// supported platforms).
inline std::uint64_t mod_ui(const Integer& a, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8);
  return mpz_fdiv_ui(a.get_mpz_t(), p);
}

inline Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace dbx

#endif  // DBX_NUMERIC_HPP
