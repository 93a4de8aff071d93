#include <dbx/prellesinger.hpp>

#include <dbx/ratfirstint.hpp>

#include <cmath>
#include <map>
#include <stdexcept>

namespace dbx {

BiPoly PowerProductCertificate::total_cofactor() const {
  BiPoly s;
  for (std::size_t i = 0; i < base.size(); ++i) s += base[i].cofactor * exponents[i];
  return s;
}

namespace {

// Columns are the cofactors, rows the monomials occurring in them or in rhs.
RatMatrix cofactor_matrix(const std::vector<DarbouxCertificate>& certs, const BiPoly& rhs, RatVector* b) {
  std::map<Monomial, std::size_t, CantorLess> rows;
  for (const auto& c : certs)
    for (const auto& [m, v] : c.cofactor.terms()) rows.emplace(m, 0);
  for (const auto& [m, v] : rhs.terms()) rows.emplace(m, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  RatMatrix mat(rows.size(), certs.size());
  for (std::size_t c = 0; c < certs.size(); ++c)
    for (const auto& [m, v] : certs[c].cofactor.terms()) mat(rows[m], c) = v;
  if (b) {
    b->assign(rows.size(), Rational(0));
    for (const auto& [m, v] : rhs.terms()) (*b)[rows[m]] = v;
  }
  return mat;
}

struct Score {
  std::size_t support = 0;
  Rational norm = 0;
  RatVector v;

  bool operator<(const Score& o) const {
    if (support != o.support) return support < o.support;
    if (norm != o.norm) return norm < o.norm;
    return v < o.v;
  }
};

Score score_of(const RatVector& v) {
  Score s;
  for (const auto& x : v) {
    if (x != 0) ++s.support;
    s.norm += abs(x);
  }
  s.v = v;
  return s;
}

bool integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

// An integer point of particular + span(kernel), searched in a box of
// rational multipliers with the denominators of the particular solution.
std::optional<RatVector> small_integer_solution(const RatVector& particular, const std::vector<IntVector>& kernel) {
  const std::size_t k = kernel.size();
  if (k == 0) return integral(particular) ? std::optional<RatVector>(particular) : std::nullopt;
  Integer den = 1;
  for (const auto& x : particular) den = int_lcm(den, x.get_den());
  constexpr double kBudget = 200000.0;
  long radius = long((std::pow(kBudget, 1.0 / double(k)) - 1) / 2);
  if (radius < 1) radius = 1;
  if (den.fits_slong_p()) radius = std::min(radius, long(12 * den.get_si()));
  std::optional<Score> best;
  std::vector<long> u(k, -radius);
  for (;;) {
    RatVector v = particular;
    for (std::size_t j = 0; j < k; ++j) {
      if (u[j] == 0) continue;
      const Rational t(Integer(u[j]), den);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += t * kernel[j][i];
    }
    for (auto& x : v) x.canonicalize();
    if (integral(v)) {
      Score s = score_of(v);
      if (!best || s < *best) best = std::move(s);
    }
    std::size_t j = 0;
    while (j < k && u[j] == radius) u[j++] = -radius;
    if (j == k) break;
    ++u[j];
  }
  if (!best) return std::nullopt;
  return best->v;
}

}  // namespace

std::optional<PowerProductCertificate> solve_log_derivative(const std::vector<DarbouxCertificate>& certs) {
  if (certs.empty()) return std::nullopt;
  const RatMatrix m = cofactor_matrix(certs, BiPoly(), nullptr);
  const auto ns = nullspace(m);
  if (ns.empty()) return std::nullopt;
  PowerProductCertificate out;
  out.kind = PowerProductCertificate::Kind::kFirstIntegral;
  out.base = certs;
  for (const auto& v : ns[0]) out.exponents.emplace_back(v);
  if (!out.total_cofactor().is_zero()) throw InternalInconsistency("log-derivative exponents failed the check");
  return out;
}

std::optional<PowerProductCertificate> solve_integrating_factor(const Derivation& d,
                                                                const std::vector<DarbouxCertificate>& certs) {
  const BiPoly rhs = -divergence(d);
  PowerProductCertificate out;
  out.kind = PowerProductCertificate::Kind::kIntegratingFactor;
  out.base = certs;
  if (certs.empty()) {
    if (!rhs.is_zero()) return std::nullopt;
    return out;
  }
  RatVector b;
  const RatMatrix m = cofactor_matrix(certs, rhs, &b);
  auto sol = solve_affine(m, b);
  if (!sol) return std::nullopt;
  out.homogeneous = sol->kernel;
  if (auto v = small_integer_solution(sol->particular, sol->kernel))
    out.exponents = *v;
  else
    out.exponents = sol->particular;
  if (!(out.total_cofactor() == rhs)) throw InternalInconsistency("integrating factor exponents failed the check");
  return out;
}

std::vector<BiPoly> inverse_integrating_factor(const Derivation& d, int n) {
  if (n < 0) throw std::invalid_argument("inverse_integrating_factor: N must be nonnegative");
  const BiPoly div = divergence(d);
  auto basis = kernel_of_cofactor_map(d, div, n);
  for (const auto& r : basis)
    if (!(apply(d, r) - div * r).is_zero()) throw InternalInconsistency("inverse integrating factor failed the check");
  return basis;
}

}  // namespace dbx
