#include <dbx/linalg.hpp>

#include <stdexcept>

namespace dbx {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) a_.emplace_back(v);
  }
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
  RatVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntVector to_primitive_integer_vector(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = int_lcm(den, x.get_den());
  IntVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(x.get_num() * exact_quotient(den, x.get_den()));
    g = int_gcd(g, out.back());
  }
  if (g == 0) return out;
  for (const auto& x : out) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (auto& x : out) x = exact_quotient(x, g);
  return out;
}

namespace {

struct Echelon {
  std::vector<Integer> a;  // row-major, rows x cols
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> pivots;  // pivot column of row k
};

// Fraction-free forward elimination of the integer-cleared matrix. Rows are
// cleared of denominators independently, which does not change the row space.
Echelon bareiss_echelon(const RatMatrix& m, std::size_t cols_used) {
  Echelon e;
  e.rows = m.rows();
  e.cols = m.cols();
  e.a.resize(e.rows * e.cols);
  for (std::size_t r = 0; r < e.rows; ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < e.cols; ++c) den = int_lcm(den, m(r, c).get_den());
    for (std::size_t c = 0; c < e.cols; ++c)
      e.a[r * e.cols + c] = m(r, c).get_num() * exact_quotient(den, m(r, c).get_den());
  }
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return e.a[r * e.cols + c]; };
  Integer prev = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < cols_used && k < e.rows; ++c) {
    std::size_t p = k;
    while (p < e.rows && at(p, c) == 0) ++p;
    if (p == e.rows) continue;
    if (p != k)
      for (std::size_t j = 0; j < e.cols; ++j) std::swap(at(p, j), at(k, j));
    for (std::size_t i = k + 1; i < e.rows; ++i) {
      for (std::size_t j = c + 1; j < e.cols; ++j) {
        Integer t = at(k, c) * at(i, j) - at(i, c) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(k, c);
    e.pivots.push_back(c);
    ++k;
  }
  return e;
}

// Back substitution on the echelon form with the given free-variable values
// (and right-hand side column `rhs_col` if present, negated into place).
RatVector back_substitute(const Echelon& e, std::size_t n, const RatVector& free_values,
                          const std::vector<bool>& is_pivot, bool with_rhs) {
  RatVector x(n, Rational(0));
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) x[c] = free_values[c];
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t pc = e.pivots[k];
    Rational s = with_rhs ? Rational(e.a[k * e.cols + n]) : Rational(0);
    for (std::size_t c = pc + 1; c < n; ++c) {
      const Integer& v = e.a[k * e.cols + c];
      if (v != 0 && x[c] != 0) s -= v * x[c];
    }
    x[pc] = s / e.a[k * e.cols + pc];
  }
  return x;
}

}  // namespace

std::vector<IntVector> nullspace(const RatMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = bareiss_echelon(m, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector fv(n, Rational(0));
    fv[f] = 1;
    basis.push_back(to_primitive_integer_vector(back_substitute(e, n, fv, is_pivot, false)));
  }
  return basis;
}

std::size_t rank(const RatMatrix& m) { return bareiss_echelon(m, m.cols()).pivots.size(); }

std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: dimension mismatch");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = bareiss_echelon(aug, n);
  // rows below the pivots must have a zero right-hand side
  for (std::size_t r = e.pivots.size(); r < e.rows; ++r)
    if (e.a[r * e.cols + n] != 0) return std::nullopt;
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  AffineSolution sol;
  sol.particular = back_substitute(e, n, RatVector(n, Rational(0)), is_pivot, true);
  sol.kernel = nullspace(m);
  return sol;
}

Integer bareiss_determinant(std::vector<Integer> a, std::size_t n) {
  if (a.size() != n * n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(t.get_mpz_t(), at(k, k).get_mpz_t(), at(i, j).get_mpz_t());
        mpz_submul(t.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

}  // namespace dbx
