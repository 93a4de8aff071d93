#include <dbx/extactic.hpp>

#include <dbx/linalg.hpp>
#include <dbx/modular.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dbx {

MonomialBasis MonomialBasis::full(int n) {
  if (n < 0) throw std::invalid_argument("basis degree must be nonnegative");
  MonomialBasis b;
  b.degree = n;
  b.include_constant = true;
  const std::uint64_t len = std::uint64_t(n + 1) * (n + 2) / 2;
  for (std::uint64_t i = 0; i < len; ++i) b.monomials.push_back(cantor_inverse(i));
  return b;
}

MonomialBasis MonomialBasis::constant_free(int n) {
  if (n < 1) throw std::invalid_argument("constant-free basis needs degree >= 1");
  MonomialBasis b = full(n);
  b.include_constant = false;
  b.monomials.erase(b.monomials.begin());
  return b;
}

PolyMatrix extactic_matrix(const Derivation& d, const MonomialBasis& basis) {
  const std::size_t l = basis.size();
  PolyMatrix m(l, std::vector<BiPoly>(l));
  for (std::size_t c = 0; c < l; ++c) {
    BiPoly cur = BiPoly::monomial(basis.monomials[c]);
    for (std::size_t r = 0; r < l; ++r) {
      m[r][c] = cur;
      if (r + 1 < l) cur = apply(d, cur);
    }
  }
  return m;
}

long degree_bound_for_length(int d, int n, long l) {
  return long(n) * l + long(d - 1) * (l - 1) * l / 2;
}

long degree_bound(int d, int n) { return degree_bound_for_length(d, n, long(n + 1) * (n + 2) / 2); }

Integer height_bound_for_length(int d, int n, const Integer& h, long l) {
  const Integer inner = Integer(l) * (d - 1) + n;
  const Integer base = 2 * Integer(l) * h * inner * inner * inner;
  return int_pow(base, static_cast<unsigned long>(l * (l - 1) / 2));
}

Integer height_bound(int d, int n, const Integer& h) {
  return height_bound_for_length(d, n, h, long(n + 1) * (n + 2) / 2);
}

namespace {

using mod::u64;

struct DenseEntry {
  int dx = -1;
  int dy = -1;
  std::vector<Integer> coeffs;  // (dx + 1) x (dy + 1), index i * (dy + 1) + j
};

DenseEntry to_dense(const BiPoly& f) {
  DenseEntry e;
  e.dx = f.degree_x();
  e.dy = f.degree_y();
  if (e.dx < 0) return e;
  e.coeffs.assign(std::size_t(e.dx + 1) * (e.dy + 1), Integer(0));
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() != 1) throw std::domain_error("determinant needs integer polynomial entries");
    e.coeffs[m.x * (e.dy + 1) + m.y] = c.get_num();
  }
  return e;
}

// Bound on deg of the determinant in one variable from the entry degrees:
// every expansion term picks one entry per row and per column.
int determinant_degree_bound(const PolyMatrix& m, int (BiPoly::*deg)() const) {
  const std::size_t n = m.size();
  long rows = 0, cols = 0;
  for (std::size_t r = 0; r < n; ++r) {
    int best = -1;
    for (std::size_t c = 0; c < n; ++c) best = std::max(best, (m[r][c].*deg)());
    if (best < 0) return -1;
    rows += best;
  }
  for (std::size_t c = 0; c < n; ++c) {
    int best = -1;
    for (std::size_t r = 0; r < n; ++r) best = std::max(best, (m[r][c].*deg)());
    if (best < 0) return -1;
    cols += best;
  }
  return static_cast<int>(std::min(rows, cols));
}

Integer integer_determinant_at(const PolyMatrix& m, const Integer& x, const Integer& y) {
  const std::size_t n = m.size();
  std::vector<Integer> a;
  a.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a.push_back(m[r][c].evaluate_integer(x, y));
  return bareiss_determinant(std::move(a), n);
}

}  // namespace

std::pair<int, int> determinant_degree_bounds(const PolyMatrix& m) {
  return {determinant_degree_bound(m, &BiPoly::degree_x), determinant_degree_bound(m, &BiPoly::degree_y)};
}

BiPoly polynomial_determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return BiPoly(1L);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");

  const int dx = determinant_degree_bound(m, &BiPoly::degree_x);
  const int dy = determinant_degree_bound(m, &BiPoly::degree_y);
  if (dx < 0 || dy < 0) return BiPoly();

  // |coefficients of det| <= max over the unit torus of |det|
  //                       <= prod_r sqrt(sum_c |M_rc|_1^2)
  Integer bound_sq = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const Integer v = m[r][c].norm1();
      s += v * v;
    }
    bound_sq *= s;
  }
  if (bound_sq == 0) return BiPoly();

  std::vector<DenseEntry> entries;
  entries.reserve(n * n);
  for (const auto& row : m)
    for (const auto& e : row) entries.push_back(to_dense(e));

  const std::size_t nx = std::size_t(dx) + 1;
  const std::size_t ny = std::size_t(dy) + 1;
  mod::CrtAccumulator crt(nx * ny);

  std::vector<u64> matrix(n * n);
  std::vector<std::vector<u64>> univariate(n * n);
  std::vector<u64> grid(nx * ny);  // grid[j * nx + i] = det at (i, j)
  std::vector<u64> residues(nx * ny);

  std::size_t prime_index = 0;
  while (crt.modulus() * crt.modulus() <= 4 * bound_sq) {
    const u64 p = mod::large_primes(prime_index + 1)[prime_index];
    ++prime_index;
    const mod::MontgomeryField f(p);

    std::vector<std::vector<u64>> coeff_mod(entries.size());
    for (std::size_t e = 0; e < entries.size(); ++e) {
      coeff_mod[e].reserve(entries[e].coeffs.size());
      for (const auto& c : entries[e].coeffs) coeff_mod[e].push_back(f.from_integer(c));
    }

    for (std::size_t j = 0; j < ny; ++j) {
      const u64 yv = f.to_mont(j);
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const DenseEntry& de = entries[e];
        auto& u = univariate[e];
        u.assign(std::size_t(de.dx + 1), 0);
        if (de.dx < 0) continue;
        const std::size_t stride = std::size_t(de.dy) + 1;
        for (int i = 0; i <= de.dx; ++i) {
          u64 acc = 0;
          for (int k = de.dy; k >= 0; --k) acc = f.add(f.mul(acc, yv), coeff_mod[e][i * stride + k]);
          u[i] = acc;
        }
      }
      // Walk x = 0, 1, 2, ... with forward-difference tables: after the
      // setup every step costs additions only.
      for (std::size_t e = 0; e < entries.size(); ++e) {
        auto& u = univariate[e];
        const std::size_t k = u.size();
        std::vector<u64> values(k);
        for (std::size_t t = 0; t < k; ++t) {
          const u64 xv = f.to_mont(t);
          u64 acc = 0;
          for (std::size_t c = k; c-- > 0;) acc = f.add(f.mul(acc, xv), u[c]);
          values[t] = acc;
        }
        for (std::size_t order = 1; order < k; ++order)
          for (std::size_t t = k - 1; t >= order; --t) values[t] = f.sub(values[t], values[t - 1]);
        u = std::move(values);  // u[i] = i-th difference at x = 0
      }
      for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t e = 0; e < entries.size(); ++e) {
          auto& u = univariate[e];
          if (u.empty()) {
            matrix[e] = 0;
            continue;
          }
          matrix[e] = u[0];
          for (std::size_t t = 0; t + 1 < u.size(); ++t) u[t] = f.add(u[t], u[t + 1]);
        }
        grid[j * nx + i] = mod::determinant(f, matrix, n);
      }
    }

    const auto inv = mod::inverse_table(f, std::max(nx, ny));
    // interpolate in X along each row, then in Y along each column
    std::vector<std::vector<u64>> row_coeffs(ny);
    for (std::size_t j = 0; j < ny; ++j)
      row_coeffs[j] = mod::interpolate_consecutive(
          f, std::vector<u64>(grid.begin() + j * nx, grid.begin() + (j + 1) * nx), inv);
    std::vector<u64> column(ny);
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t j = 0; j < ny; ++j) column[j] = row_coeffs[j][a];
      auto cy = mod::interpolate_consecutive(f, column, inv);
      for (std::size_t b = 0; b < ny; ++b) residues[a * ny + b] = f.from_mont(cy[b]);
    }
    crt.add(p, residues);
  }

  const auto coeffs = crt.symmetric();
  BiPoly det;
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      if (coeffs[a * ny + b] != 0) det.add_term({unsigned(a), unsigned(b)}, Rational(coeffs[a * ny + b]));
  return det;
}

namespace {

// Determinant of an n x n matrix of truncated power series (Montgomery
// form, length prec each). Pivots must be units; returns false when the
// constant-term matrix is singular.
bool series_determinant(const mod::MontgomeryField& f, std::vector<std::vector<u64>>& a, std::size_t n,
                        std::size_t prec, std::vector<u64>& det) {
  det.assign(prec, 0);
  det[0] = f.one();
  std::vector<u64> inv(prec), factor(prec), tmp(prec);
  auto mul_into = [&](const std::vector<u64>& x, const std::vector<u64>& y, std::vector<u64>& out) {
    for (std::size_t k = 0; k < prec; ++k) {
      u64 acc = 0;
      for (std::size_t i = 0; i <= k; ++i)
        if (x[i] != 0 && y[k - i] != 0) acc = f.add(acc, f.mul(x[i], y[k - i]));
      out[k] = acc;
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k][0] == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      for (auto& v : det) v = f.neg(v);
    }
    const auto& piv = a[k * n + k];
    mul_into(det, piv, tmp);
    det = tmp;
    // inverse of the pivot series
    inv[0] = f.inv(piv[0]);
    for (std::size_t i = 1; i < prec; ++i) {
      u64 acc = 0;
      for (std::size_t j = 1; j <= i; ++j) acc = f.add(acc, f.mul(piv[j], inv[i - j]));
      inv[i] = f.neg(f.mul(acc, inv[0]));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      auto& lead = a[i * n + k];
      bool zero = true;
      for (u64 v : lead) zero = zero && v == 0;
      if (zero) continue;
      mul_into(lead, inv, factor);
      for (std::size_t j = k + 1; j < n; ++j) {
        mul_into(factor, a[k * n + j], tmp);
        auto& dst = a[i * n + j];
        for (std::size_t t = 0; t < prec; ++t) dst[t] = f.sub(dst[t], tmp[t]);
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<UPolyZ>> polynomial_determinant_series(const PolyMatrix& m, int prec_in) {
  const std::size_t n = m.size();
  if (prec_in < 1) throw std::invalid_argument("series precision must be positive");
  const std::size_t prec = std::size_t(prec_in);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) {
    std::vector<UPolyZ> one(prec);
    one[0] = UPolyZ(Integer(1));
    return one;
  }
  const int dy = determinant_degree_bound(m, &BiPoly::degree_y);
  if (dy < 0) return std::nullopt;
  Integer bound_sq = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < n; ++c) {
      const Integer v = m[r][c].norm1();
      s += v * v;
    }
    bound_sq *= s;
  }
  if (bound_sq == 0) return std::nullopt;

  // per entry: coefficient of X^i Y^j at [i * (deg_y + 1) + j], i < prec
  struct Entry {
    int dy = -1;
    std::vector<Integer> c;
  };
  std::vector<Entry> entries;
  entries.reserve(n * n);
  for (const auto& row : m)
    for (const auto& e : row) {
      Entry en;
      en.dy = e.degree_y();
      if (en.dy >= 0) {
        en.c.assign(prec * std::size_t(en.dy + 1), Integer(0));
        for (const auto& [mon, v] : e.terms()) {
          if (v.get_den() != 1) throw std::domain_error("determinant needs integer polynomial entries");
          if (mon.x < prec) en.c[mon.x * (en.dy + 1) + mon.y] = v.get_num();
        }
      }
      entries.push_back(std::move(en));
    }

  const std::size_t ny = std::size_t(dy) + 1;
  mod::CrtAccumulator crt(prec * ny);
  std::vector<u64> residues(prec * ny);
  std::size_t prime_index = 0;
  int failures = 0;
  while (crt.modulus() * crt.modulus() <= 4 * bound_sq) {
    const u64 p = mod::large_primes(prime_index + 1)[prime_index];
    ++prime_index;
    const mod::MontgomeryField f(p);
    std::vector<std::vector<u64>> cm(entries.size());
    for (std::size_t e = 0; e < entries.size(); ++e)
      for (const auto& c : entries[e].c) cm[e].push_back(f.from_integer(c));

    std::vector<u64> nodes;
    std::vector<std::vector<u64>> values(prec);
    std::vector<std::vector<u64>> a(n * n, std::vector<u64>(prec));
    std::vector<u64> det;
    u64 y = 0;
    std::size_t skipped = 0;
    while (nodes.size() < ny && skipped <= ny + 16) {
      const u64 yv = f.to_mont(y++);
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const Entry& en = entries[e];
        for (std::size_t i = 0; i < prec; ++i) {
          u64 acc = 0;
          if (en.dy >= 0)
            for (int j = en.dy; j >= 0; --j) acc = f.add(f.mul(acc, yv), cm[e][i * (en.dy + 1) + j]);
          a[e][i] = acc;
        }
      }
      if (!series_determinant(f, a, n, prec, det)) {
        ++skipped;
        continue;
      }
      nodes.push_back(yv);
      for (std::size_t k = 0; k < prec; ++k) values[k].push_back(det[k]);
    }
    if (nodes.size() < ny) {
      // the constant term vanishes for many Y: identically, or modulo p
      if (++failures >= 3) return std::nullopt;
      continue;
    }
    for (std::size_t k = 0; k < prec; ++k) {
      auto cy = mod::interpolate(f, nodes, values[k]);
      for (std::size_t j = 0; j < ny; ++j) residues[k * ny + j] = f.from_mont(cy[j]);
    }
    crt.add(p, residues);
  }
  const auto coeffs = crt.symmetric();
  std::vector<UPolyZ> out;
  for (std::size_t k = 0; k < prec; ++k)
    out.emplace_back(std::vector<Integer>(coeffs.begin() + k * ny, coeffs.begin() + (k + 1) * ny));
  return out;
}

namespace {

ExtacticCurve make_curve(const Derivation& d, int n, bool reduced) {
  const MonomialBasis basis = reduced ? MonomialBasis::constant_free(n) : MonomialBasis::full(n);
  ExtacticCurve curve;
  curve.n = n;
  curve.reduced = reduced;
  curve.basis_size = basis.size();
  curve.derivation_fingerprint = d.fingerprint();
  curve.poly = polynomial_determinant(extactic_matrix(d, basis));
  return curve;
}

}  // namespace

ExtacticCurve extactic_curve(const Derivation& d, int n) {
  if (n < 0) throw std::invalid_argument("extactic_curve: N must be nonnegative");
  return make_curve(d, n, false);
}

ExtacticCurve extactic_reduced(const Derivation& d, int n) {
  if (n < 1) throw std::invalid_argument("extactic_reduced: N must be at least 1");
  return make_curve(d, n, true);
}

bool extactic_nonzero_by_evaluation(const Derivation& d, int n, bool reduced, int trials) {
  const MonomialBasis basis = reduced ? MonomialBasis::constant_free(n) : MonomialBasis::full(n);
  const PolyMatrix m = extactic_matrix(d, basis);
  // a nonzero E of degree <= b vanishes at a random point of [0, R]^2 with
  // probability <= b / (R + 1)
  const long range = 1000 * std::max(1L, degree_bound_for_length(d.degree(), n, long(basis.size())));
  // fixed seed: the outcome must be reproducible run to run
  std::mt19937_64 rng(0x5eedULL + std::uint64_t(n) * 7919 + (reduced ? 1 : 0));
  std::uniform_int_distribution<long> dist(0, range);
  for (int t = 0; t < trials; ++t) {
    const Integer x = dist(rng);
    const Integer y = dist(rng);
    if (integer_determinant_at(m, x, y) != 0) return true;
  }
  return false;
}

bool extactic_vanishes(const Derivation& d, int n, bool reduced) {
  if (extactic_nonzero_by_evaluation(d, n, reduced)) return false;
  return reduced ? extactic_reduced(d, n).poly.is_zero() : extactic_curve(d, n).poly.is_zero();
}

std::optional<int> minimal_null_degree(const Derivation& d, int n) {
  if (n < 1) throw std::invalid_argument("minimal_null_degree: N must be at least 1");
  for (int k = 1; k <= n; ++k)
    if (extactic_vanishes(d, k)) return k;
  return std::nullopt;
}

}  // namespace dbx
