#include <dbx/modular.hpp>

#include <mutex>
#include <stdexcept>

namespace dbx::mod {

MontgomeryField::MontgomeryField(u64 p) : p_(p) {
  if (p % 2 == 0 || p >= (u64(1) << 62)) throw std::invalid_argument("unsupported modulus");
  // Newton iteration for p^{-1} mod 2^64
  u64 inv = p;
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  pneg_inv_ = ~inv + 1;
  const u128 r = (u128(1) << 64) % p;
  one_ = static_cast<u64>(r);
  r2_ = static_cast<u64>((u128(one_) * one_) % p);
}

u64 MontgomeryField::pow(u64 a, u64 e) const {
  u64 r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

const std::vector<u64>& large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  u64 candidate = primes.empty() ? (u64(1) << 62) - 1 : primes.back() - 2;
  while (primes.size() < count) {
    Integer c = from_u64(candidate);
    if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

u64 determinant(const MontgomeryField& f, std::vector<u64>& a, std::size_t n) {
  // Division-free elimination: row_i <- piv * row_i - a_ik * row_k scales the
  // determinant by piv, which is undone with one inversion at the end.
  u64 diag = f.one();
  u64 scale = f.one();
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      negate = !negate;
    }
    const u64 piv = a[k * n + k];
    diag = f.mul(diag, piv);
    const u64* rk = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      u64* ri = &a[i * n];
      const u64 factor = ri[k];
      if (factor == 0) continue;
      scale = f.mul(scale, piv);
      for (std::size_t j = k + 1; j < n; ++j) ri[j] = f.sub(f.mul(piv, ri[j]), f.mul(factor, rk[j]));
    }
  }
  u64 det = f.mul(diag, f.inv(scale));
  return negate ? f.neg(det) : det;
}

std::vector<u64> inverse_table(const MontgomeryField& f, std::size_t n) {
  std::vector<u64> inv(n, 0);
  if (n > 1) inv[1] = f.one();
  for (std::size_t k = 2; k < n; ++k) {
    // inv[k] = -(p / k) * inv[p % k]
    const u64 p = f.prime();
    inv[k] = f.neg(f.mul(f.to_mont(p / k), inv[p % k]));
  }
  return inv;
}

std::vector<u64> interpolate_consecutive(const MontgomeryField& f, const std::vector<u64>& values,
                                         const std::vector<u64>& inv) {
  const std::size_t n = values.size();
  if (n == 0) return {};
  if (inv.size() < n) throw std::invalid_argument("inverse table too short");
  // Newton divided differences on nodes 0, 1, ..., n-1: the k-th order
  // differences divide by k.
  std::vector<u64> dd = values;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), inv[k]);
  // Expand sum dd[k] * prod_{j<k} (x - j) by Horner from the top.
  std::vector<u64> coeffs(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // coeffs = coeffs * (x - k) + dd[k]
    const u64 node = f.to_mont(k);
    for (std::size_t i = n - 1; i > 0; --i) coeffs[i] = f.sub(coeffs[i - 1], f.mul(coeffs[i], node));
    coeffs[0] = f.sub(0, f.mul(coeffs[0], node));
    coeffs[0] = f.add(coeffs[0], dd[k]);
  }
  return coeffs;
}

std::vector<u64> interpolate(const MontgomeryField& f, const std::vector<u64>& nodes, const std::vector<u64>& values) {
  const std::size_t n = values.size();
  if (nodes.size() != n) throw std::invalid_argument("interpolation size mismatch");
  std::vector<u64> dd = values;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i)
      dd[i] = f.mul(f.sub(dd[i], dd[i - 1]), f.inv(f.sub(nodes[i], nodes[i - k])));
  std::vector<u64> coeffs(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    const u64 node = nodes[k];
    for (std::size_t i = n - 1; i > 0; --i) coeffs[i] = f.sub(coeffs[i - 1], f.mul(coeffs[i], node));
    coeffs[0] = f.sub(dd[k], f.mul(coeffs[0], node));
  }
  return coeffs;
}

void CrtAccumulator::add(u64 p, const std::vector<u64>& residues) {
  if (residues.size() != values_.size()) throw std::invalid_argument("CRT size mismatch");
  const Integer pz = from_u64(p);
  if (modulus_ == 1) {
    for (std::size_t i = 0; i < residues.size(); ++i) values_[i] = from_u64(residues[i]);
    modulus_ = pz;
    return;
  }
  // x = v + M * ((r - v) * M^{-1} mod p)
  const u64 m_mod = mod_ui(modulus_, p);
  Integer minv_z;
  Integer mz = from_u64(m_mod);
  mpz_invert(minv_z.get_mpz_t(), mz.get_mpz_t(), pz.get_mpz_t());
  const u64 minv = mod_ui(minv_z, p);
  for (std::size_t i = 0; i < residues.size(); ++i) {
    const u64 v = mod_ui(values_[i], p);
    const u64 r = residues[i];
    const u64 diff = r >= v ? r - v : r + p - v;
    const u64 t = static_cast<u64>((u128(diff) * minv) % p);
    if (t != 0) mpz_addmul_ui(values_[i].get_mpz_t(), modulus_.get_mpz_t(), t);
  }
  modulus_ *= pz;
}

std::vector<Integer> CrtAccumulator::symmetric() const {
  std::vector<Integer> out = values_;
  const Integer half = modulus_ / 2;
  for (auto& v : out)
    if (v > half) v -= modulus_;
  return out;
}

}  // namespace dbx::mod
