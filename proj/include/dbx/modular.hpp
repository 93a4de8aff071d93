#ifndef DBX_MODULAR_HPP
#define DBX_MODULAR_HPP

#include <dbx/numeric.hpp>

#include <cstdint>
#include <vector>

namespace dbx::mod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Arithmetic modulo an odd prime p < 2^62 in Montgomery representation.
/// Values handed to mul/add/sub are in Montgomery form; use to_mont and
/// from_mont at the boundaries.
class MontgomeryField {
 public:
  explicit MontgomeryField(u64 p);

  u64 prime() const { return p_; }

  u64 mul(u64 a, u64 b) const { return reduce(u128(a) * b); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }

  u64 to_mont(u64 a) const { return mul(a % p_, r2_); }
  u64 from_mont(u64 a) const { return reduce(a); }
  u64 from_integer(const Integer& a) const { return to_mont(mod_ui(a, p_)); }

  u64 one() const { return one_; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

 private:
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * pneg_inv_;
    const u128 s = t + u128(m) * p_;
    u64 r = static_cast<u64>(s >> 64);
    return r >= p_ ? r - p_ : r;
  }

  u64 p_;
  u64 pneg_inv_;  // -p^{-1} mod 2^64
  u64 r2_;        // 2^128 mod p
  u64 one_;       // 2^64 mod p
};

/// The `count` largest primes below 2^62, in decreasing order.
const std::vector<u64>& large_primes(std::size_t count);

/// Determinant of a row-major n x n matrix over the field (Montgomery form in
/// and out). The matrix is destroyed.
u64 determinant(const MontgomeryField& f, std::vector<u64>& a, std::size_t n);

/// inv[k] = 1/k (Montgomery form) for 1 <= k < n; requires n <= p.
std::vector<u64> inverse_table(const MontgomeryField& f, std::size_t n);

/// Coefficients (Montgomery form) of the unique polynomial of degree < n
/// taking values[i] at the point i, i = 0..n-1, n = values.size(); `inv` is
/// an inverse_table of size >= n.
std::vector<u64> interpolate_consecutive(const MontgomeryField& f, const std::vector<u64>& values,
                                         const std::vector<u64>& inv);

/// Coefficients (Montgomery form) of the polynomial of degree < n taking
/// values[i] at nodes[i] (distinct, Montgomery form).
std::vector<u64> interpolate(const MontgomeryField& f, const std::vector<u64>& nodes, const std::vector<u64>& values);

/// Incremental Chinese remaindering of a vector of integers.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t size) : values_(size, Integer(0)), modulus_(1) {}

  /// Adds residues (plain form, not Montgomery) modulo prime p.
  void add(u64 p, const std::vector<u64>& residues);
  const Integer& modulus() const { return modulus_; }
  /// Symmetric representatives in (-M/2, M/2].
  std::vector<Integer> symmetric() const;

 private:
  std::vector<Integer> values_;
  Integer modulus_;
};

}  // namespace dbx::mod

#endif  // DBX_MODULAR_HPP
