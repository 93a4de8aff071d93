#include <dbx/factor.hpp>

#include <dbx/linalg.hpp>
#include <dbx/modular.hpp>
#include <dbx/polyalg.hpp>

#include "modpoly.hpp"

#include <algorithm>
#include <map>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>

namespace dbx {

BiPoly Factorization::expand() const {
  BiPoly r(unit);
  for (const auto& [f, e] : factors) r *= pow(f, e);
  return r;
}

namespace {


using namespace detail;

struct DistinctDegree {
  std::vector<std::pair<MP, unsigned>> blocks;  // product of the degree-i factors
  MP rest;  // factors of degree > max_degree (empty when none)
};

// f monic squarefree mod p.
DistinctDegree distinct_degree(MP f, u64 p, int max_degree) {
  DistinctDegree out;
  const Integer pz = from_u64(p);
  const MP x{0, 1};
  MP h = mp_rem(x, f, p);
  bool capped = false;
  for (unsigned i = 1; 2 * i <= f.size() - 1; ++i) {
    if (max_degree >= 0 && int(i) > max_degree) {
      capped = true;
      break;
    }
    h = mp_powmod(h, pz, f, p);
    MP g = mp_gcd(mp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      out.blocks.push_back({g, i});
      f = mp_quo(f, g, p);
      h = mp_rem(h, f, p);
    }
  }
  if (f.size() > 1) {
    // without the cap, every factor of degree <= deg f / 2 is gone, so the
    // rest is irreducible
    const int deg = int(f.size()) - 1;
    if (!capped && (max_degree < 0 || deg <= max_degree))
      out.blocks.push_back({f, unsigned(deg)});
    else
      out.rest = f;
  }
  return out;
}

void equal_degree(const MP& f, unsigned d, u64 p, std::mt19937_64& rng, std::vector<MP>& out) {
  const std::size_t n = f.size() - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  const Integer e = (int_pow(from_u64(p), d) - 1) / 2;
  std::uniform_int_distribution<u64> dist(0, p - 1);
  for (;;) {
    MP a(n);
    for (auto& v : a) v = dist(rng);
    mp_trim(a);
    if (a.size() <= 1) continue;
    MP g = mp_gcd(a, f, p);
    if (g.size() == 1) {
      MP b = mp_powmod(a, e, f, p);
      if (b.empty()) continue;
      b[0] = (b[0] + p - 1) % p;
      mp_trim(b);
      g = mp_gcd(b, f, p);
    }
    if (g.size() > 1 && g.size() < f.size()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(mp_quo(f, g, p), d, p, rng, out);
      return;
    }
  }
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---- integer polynomials modulo m ------------------------------------------

UPolyZ zmod(const UPolyZ& a, const Integer& m) {
  std::vector<Integer> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_fdiv_r(c[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  return UPolyZ(std::move(c));
}

UPolyZ zsymmetric(const UPolyZ& a, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    mpz_fdiv_r(c[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (c[i] > half) c[i] -= m;
  }
  return UPolyZ(std::move(c));
}

// Division by a monic b modulo m.
std::pair<UPolyZ, UPolyZ> zdivrem_monic(const UPolyZ& a, const UPolyZ& b, const Integer& m) {
  std::vector<Integer> rem = zmod(a, m).coeffs();
  const int db = b.degree();
  const int da = int(rem.size()) - 1;
  if (da < db) return {UPolyZ(), UPolyZ(std::move(rem))};
  std::vector<Integer> q(da - db + 1, Integer(0));
  for (int k = da - db; k >= 0; --k) {
    Integer c;
    mpz_fdiv_r(c.get_mpz_t(), rem[k + db].get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) {
      rem[k + i] -= c * b[i];
      mpz_fdiv_r(rem[k + i].get_mpz_t(), rem[k + i].get_mpz_t(), m.get_mpz_t());
    }
  }
  rem.resize(db);
  return {UPolyZ(std::move(q)), UPolyZ(std::move(rem))};
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic;
// lifts everything to m^2.
void hensel_step(const UPolyZ& f, UPolyZ& g, UPolyZ& h, UPolyZ& s, UPolyZ& t, const Integer& m) {
  const Integer m2 = m * m;
  const UPolyZ e = zmod(f - g * h, m2);
  auto [q, r] = zdivrem_monic(s * e, h, m2);
  UPolyZ g2 = zmod(g + t * e + q * g, m2);
  UPolyZ h2 = zmod(h + r, m2);
  UPolyZ b = zmod(s * g2 + t * h2 - UPolyZ(Integer(1)), m2);
  auto [c, d] = zdivrem_monic(s * b, h2, m2);
  s = zmod(s - d, m2);
  t = zmod(t - t * b - c * g2, m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod factors (mod p, factors monic, pairwise coprime)
// to a factorization modulo some p^(2^j) >= target; returns monic lifts.
std::vector<UPolyZ> multifactor_lift(const UPolyZ& f, const std::vector<MP>& factors, u64 p,
                                     const Integer& target, Integer* modulus) {
  const Integer pz = from_u64(p);
  if (factors.size() == 1) {
    Integer m = pz;
    while (m < target) m *= m;
    Integer inv;
    Integer lc = f.lc();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
    *modulus = m;
    return {zmod(f.scaled(inv), m)};
  }
  const std::size_t k = factors.size() / 2;
  MP gl{mod_ui(f.lc(), p)}, hr{1};
  for (std::size_t i = 0; i < k; ++i) gl = mp_mul(gl, factors[i], p);
  for (std::size_t i = k; i < factors.size(); ++i) hr = mp_mul(hr, factors[i], p);
  MP sm, tm;
  if (!mp_bezout(gl, hr, p, &sm, &tm)) throw InternalInconsistency("modular factors not coprime");
  // normalize degrees: deg s < deg h, deg t < deg g
  MP q;
  mp_divrem(sm, hr, p, &q, &sm);
  tm = mp_quo(mp_sub(MP{1}, mp_mul(sm, gl, p), p), hr, p);
  UPolyZ g = mp_to_z(gl), h = mp_to_z(hr), s = mp_to_z(sm), t = mp_to_z(tm);
  Integer m = pz;
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  std::vector<MP> left(factors.begin(), factors.begin() + k);
  std::vector<MP> right(factors.begin() + k, factors.end());
  Integer ml, mr;
  auto a = multifactor_lift(g, left, p, target, &ml);
  auto b = multifactor_lift(h, right, p, target, &mr);
  // bring every lift to the common modulus m (all lifts are unique mod p^j)
  Integer common = std::min({m, ml, mr});
  for (auto& v : a) v = zmod(v, common);
  for (auto& v : b) v = zmod(v, common);
  a.insert(a.end(), b.begin(), b.end());
  *modulus = common;
  return a;
}

Integer isqrt_ceil(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) ++r;
  return r;
}

UPolyZ positive(UPolyZ f) {
  if (!f.is_zero() && f.lc() < 0) f = -f;
  return f;
}

// Calls visit(indices) for every size-k subset of [0, n) in lexicographic
// order until visit returns true; returns whether it did.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

// ---- univariate over Z -----------------------------------------------------

UPolyZ univariate_gcd(const UPolyZ& a_in, const UPolyZ& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  if (a_in.is_zero()) return primitive_part(b_in);
  if (b_in.is_zero()) return primitive_part(a_in);
  const UPolyZ a = primitive_part(a_in);
  const UPolyZ b = primitive_part(b_in);
  if (a.degree() == 0 || b.degree() == 0) return UPolyZ(Integer(1));
  const Integer lcg = int_gcd(a.lc(), b.lc());
  int best = std::min(a.degree(), b.degree()) + 1;
  std::optional<mod::CrtAccumulator> crt;
  std::vector<Integer> previous;
  for (std::size_t i = 0;; ++i) {
    const u64 p = word_primes(i + 1)[i];
    if (mod_ui(a.lc(), p) == 0 || mod_ui(b.lc(), p) == 0) continue;
    MP g = mp_gcd(mp_from(a, p), mp_from(b, p), p);
    const int deg = int(g.size()) - 1;
    if (deg == 0) return UPolyZ(Integer(1));
    if (deg > best) continue;
    g = mp_scale(std::move(g), mod_ui(lcg, p), p);
    g.resize(deg + 1, 0);
    if (deg < best) {
      best = deg;
      crt.emplace(std::size_t(deg + 1));
      previous.clear();
    }
    crt->add(p, g);
    auto cur = crt->symmetric();
    if (cur == previous) {
      UPolyZ cand = primitive_part(UPolyZ(cur));
      if (try_exact_div(a, cand) && try_exact_div(b, cand)) return cand;
    }
    previous = std::move(cur);
  }
}

std::vector<std::pair<UPolyZ, unsigned>> squarefree_univariate(const UPolyZ& f_in) {
  std::vector<std::pair<UPolyZ, unsigned>> out;
  if (f_in.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  const UPolyZ f = primitive_part(f_in);
  if (f.degree() <= 0) return out;
  const UPolyZ df = f.derivative();
  const UPolyZ c = univariate_gcd(f, df);
  UPolyZ w = *try_exact_div(f, c);
  UPolyZ y = *try_exact_div(df, c);
  for (unsigned i = 1; w.degree() > 0; ++i) {
    const UPolyZ z = y - w.derivative();
    const UPolyZ g = z.is_zero() ? primitive_part(w) : univariate_gcd(w, z);
    if (g.degree() > 0) out.push_back({positive(g), i});
    w = *try_exact_div(w, g);
    if (z.is_zero()) break;
    y = *try_exact_div(z, g);
  }
  return out;
}

std::vector<UPolyZ> factor_squarefree_univariate(const UPolyZ& f_in, int max_degree) {
  const UPolyZ f = positive(primitive_part(f_in));
  if (f.degree() < 1) throw std::invalid_argument("factoring a constant");
  const bool restricted = max_degree >= 0 && max_degree < f.degree();
  if (f.degree() == 1) return (restricted && max_degree < 1) ? std::vector<UPolyZ>{} : std::vector<UPolyZ>{f};
  if (restricted && max_degree == 0) return {};

  // pick among a few admissible small primes the one with fewest factors
  u64 best_p = 0;
  DistinctDegree best_dd;
  std::size_t best_count = 0;
  int admissible = 0;
  for (u64 p = 3; admissible < 5; p += 2) {
    if (!is_small_prime(p)) continue;
    if (mod_ui(f.lc(), p) == 0) continue;
    MP fp = mp_monic(mp_from(f, p), p);
    if (mp_gcd(fp, mp_derivative(fp, p), p).size() != 1) continue;
    ++admissible;
    DistinctDegree dd = distinct_degree(fp, p, restricted ? max_degree : -1);
    std::size_t count = 0;
    for (const auto& [g, d] : dd.blocks) count += (g.size() - 1) / d;
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_dd = std::move(dd);
      best_count = count;
    }
    if (count <= 1) break;
  }
  const u64 p = best_p;
  if (!restricted && best_count == 1) return {f};
  if (restricted && best_count == 0) return {};

  std::mt19937_64 rng(0xfac7ULL);
  std::vector<MP> modular;
  for (const auto& [g, d] : best_dd.blocks) {
    std::vector<MP> parts;
    equal_degree(g, d, p, rng, parts);
    std::sort(parts.begin(), parts.end(), mp_less);
    modular.insert(modular.end(), parts.begin(), parts.end());
  }
  const std::size_t r = modular.size();
  std::vector<MP> all = modular;
  if (!best_dd.rest.empty()) all.push_back(best_dd.rest);

  // Landau-Mignotte: any factor of degree <= D has coefficients below
  // 2^D |f|_2; the lifted candidates carry the extra factor lc(f).
  Integer norm_sq = 0;
  for (const auto& c : f.coeffs()) norm_sq += c * c;
  const unsigned dbound = restricted ? unsigned(max_degree) : unsigned(f.degree());
  const Integer bound = abs_value(f.lc()) * int_pow(Integer(2), dbound) * isqrt_ceil(norm_sq);
  Integer target = 2 * bound + 1;
  Integer modulus;
  std::vector<UPolyZ> lifted = multifactor_lift(f, all, p, target, &modulus);

  std::vector<UPolyZ> found;
  std::vector<std::size_t> active(r);
  std::iota(active.begin(), active.end(), 0);
  UPolyZ cur = f;
  std::size_t s = 1;
  while (s <= active.size()) {
    if (!restricted && 2 * s > active.size()) break;
    std::vector<std::size_t> hit;
    const bool any = for_each_subset(active.size(), s, [&](const std::vector<std::size_t>& idx) {
      int deg = 0;
      for (auto i : idx) deg += int(modular[active[i]].size()) - 1;
      if (restricted && deg > max_degree) return false;
      UPolyZ g(cur.lc());
      for (auto i : idx) g = zmod(g * lifted[active[i]], modulus);
      g = primitive_part(zsymmetric(g, modulus));
      auto q = try_exact_div(cur, g);
      if (!q) return false;
      found.push_back(positive(g));
      cur = std::move(*q);
      hit = idx;
      return true;
    });
    if (!any) {
      ++s;
      continue;
    }
    for (auto it = hit.rbegin(); it != hit.rend(); ++it) active.erase(active.begin() + *it);
  }
  if (!restricted && cur.degree() > 0) found.push_back(positive(primitive_part(cur)));
  return found;
}

namespace {

std::pair<Rational, UPolyZ> split_content(const UPolyQ& f) {
  Integer den = 1;
  for (const auto& c : f.coeffs()) den = int_lcm(den, c.get_den());
  std::vector<Integer> v;
  for (const auto& c : f.coeffs()) v.push_back(Rational(c * den).get_num());
  UPolyZ z(std::move(v));
  Integer cont = content(z);
  if (z.lc() < 0) cont = -cont;
  std::vector<Integer> w;
  for (const auto& c : z.coeffs()) w.push_back(exact_quotient(c, cont));
  return {Rational(cont, den), UPolyZ(std::move(w))};
}

BiPoly swap_xy(const BiPoly& f) { return swap_variables(f); }

// Coefficients of Y^j as integer polynomials in X.
std::vector<UPolyZ> y_coefficients(const BiPoly& f) {
  std::vector<std::vector<Integer>> rows(std::max(0, f.degree_y() + 1));
  for (auto& r : rows) r.assign(std::max(0, f.degree_x() + 1), Integer(0));
  for (const auto& [m, c] : f.terms()) {
    if (c.get_den() != 1) throw std::domain_error("expected integer coefficients");
    rows[m.y][m.x] = c.get_num();
  }
  std::vector<UPolyZ> out;
  for (auto& r : rows) out.emplace_back(std::move(r));
  return out;
}

void sort_canonical(std::vector<BiPoly>& v) {
  std::sort(v.begin(), v.end(), canonical_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// ---- Hensel lifting over Q[[t]] ---------------------------------------------

using QSeries = std::vector<UPolyQ>;  // coefficient of t^k, polynomials in y

// Lifts prod u_i^e_i = ft (mod t) to precision ft.size(), for monic ft and
// monic pairwise coprime squarefree u_i. nullopt when the first-order
// equation has no solution, which happens for non-generic specializations.
std::optional<std::vector<QSeries>> lift_series(const QSeries& ft, const std::vector<UPolyQ>& u,
                                                const std::vector<unsigned>& e) {
  const std::size_t prec = ft.size();
  const std::size_t r = u.size();
  std::vector<std::size_t> atom_of;
  for (std::size_t i = 0; i < r; ++i)
    for (unsigned k = 0; k < e[i]; ++k) atom_of.push_back(i);
  const std::size_t m = atom_of.size();

  UPolyQ reduced_r(Rational(1));
  for (std::size_t i = 0; i < r; ++i)
    for (unsigned k = 1; k < e[i]; ++k) reduced_r *= u[i];
  std::vector<UPolyQ> bez(r);
  for (std::size_t i = 0; i < r; ++i) {
    UPolyQ w(Rational(1));
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) w *= u[j];
    auto [g, s, t] = field_xgcd(divrem(w, u[i]).second, u[i]);
    if (g.degree() != 0) return std::nullopt;
    bez[i] = s;
  }

  std::vector<QSeries> lifted(r, QSeries(prec));
  for (std::size_t i = 0; i < r; ++i) lifted[i][0] = u[i];
  std::vector<QSeries> prefix(m, QSeries(prec));
  auto update = [&](std::size_t k) {
    for (std::size_t j = 0; j < m; ++j) {
      const QSeries& a = lifted[atom_of[j]];
      if (j == 0) {
        prefix[0][k] = a[k];
        continue;
      }
      UPolyQ acc;
      for (std::size_t i = 0; i <= k; ++i)
        if (!prefix[j - 1][i].is_zero() && !a[k - i].is_zero()) acc += prefix[j - 1][i] * a[k - i];
      prefix[j][k] = std::move(acc);
    }
  };
  update(0);
  if (!(prefix[m - 1][0] == ft[0])) return std::nullopt;
  for (std::size_t k = 1; k < prec; ++k) {
    update(k);
    const UPolyQ err = ft[k] - prefix[m - 1][k];
    if (err.is_zero()) continue;
    auto [q, rem] = divrem(err, reduced_r);
    if (!rem.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < r; ++i)
      lifted[i][k] = divrem((bez[i] * q).scaled(Rational(1, e[i])), u[i]).second;
    update(k);
    if (!(prefix[m - 1][k] == ft[k])) return std::nullopt;
  }
  return lifted;
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
  QSeries c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Given the monic series product P of a candidate subset, finds the
// polynomial c(t) of least degree such that c P is, modulo t^prec, a
// polynomial of total degree <= dmax; that polynomial (in X = t, Y = y) is
// the candidate factor.
std::optional<BiPoly> candidate_from_product(const QSeries& ps, int dmax) {
  const int delta = ps[0].degree();
  const int prec = int(ps.size());
  for (int mc = 0; mc <= dmax - delta; ++mc) {
    std::vector<std::vector<Rational>> rows;
    for (int j = 0; j <= delta; ++j)
      for (int a = std::max(0, dmax - j + 1); a < prec; ++a) {
        std::vector<Rational> row(mc + 1, Rational(0));
        bool nonzero = false;
        for (int b = 0; b <= mc && b <= a; ++b) {
          row[b] = ps[a - b].coeff(j);
          if (row[b] != 0) nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    RatMatrix mat(rows.size(), std::size_t(mc + 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (int b = 0; b <= mc; ++b) mat(i, b) = rows[i][b];
    auto ns = nullspace(mat);
    if (ns.empty()) continue;
    const IntVector& c = ns[0];
    BiPoly h;
    for (int a = 0; a <= dmax && a < prec; ++a)
      for (int j = 0; j <= delta; ++j) {
        Rational v = 0;
        for (int b = 0; b <= mc && b <= a; ++b) v += Rational(c[b]) * ps[a - b].coeff(j);
        if (v != 0) h.add_term({unsigned(a), unsigned(j)}, v);
      }
    if (h.is_zero() || h.total_degree() > dmax) return std::nullopt;
    return h.normalized();
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<BiPoly>> factors_from_series(const std::vector<UPolyZ>& series, int max_degree,
                                                       const std::function<bool(const BiPoly&)>& accept,
                                                       bool complete) {
  if (series.empty() || series[0].is_zero()) throw std::invalid_argument("series with zero constant term");
  if (int(series.size()) < 2 * max_degree + 1) throw std::invalid_argument("series precision too low");
  const int deg = series[0].degree();
  std::vector<BiPoly> found;
  if (deg <= 0) return found;
  const std::size_t prec = series.size();
  for (const auto& s : series)
    if (s.degree() > deg) throw std::invalid_argument("leading coefficient vanishes at t = 0");

  // make the series monic in y
  std::vector<Rational> lc(prec), inv(prec);
  for (std::size_t k = 0; k < prec; ++k) lc[k] = Rational(series[k].coeff(deg));
  inv[0] = 1 / lc[0];
  for (std::size_t k = 1; k < prec; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += lc[i] * inv[k - i];
    inv[k] = -acc / lc[0];
  }
  QSeries ft(prec);
  for (std::size_t k = 0; k < prec; ++k)
    for (std::size_t i = 0; i <= k; ++i)
      if (inv[k - i] != 0) ft[k] += to_rational_poly(series[i]).scaled(inv[k - i]);

  std::vector<UPolyQ> u;
  std::vector<unsigned> e;
  std::vector<int> degs;
  for (const auto& [part, mult] : squarefree_univariate(series[0]))
    for (const auto& g : factor_squarefree_univariate(part)) {
      UPolyQ q = to_rational_poly(g);
      u.push_back(q.scaled(1 / q.lc()));
      e.push_back(mult);
      degs.push_back(g.degree());
    }
  auto lifted = lift_series(ft, u, e);
  if (!lifted) return std::nullopt;

  std::vector<unsigned> classes(e.begin(), e.end());
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (unsigned cls : classes) {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (e[i] == cls) active.push_back(i);
    std::size_t s = 1;
    while (s <= active.size()) {
      if (complete && 2 * s > active.size()) break;
      std::vector<std::size_t> hit;
      const bool any = for_each_subset(active.size(), s, [&](const std::vector<std::size_t>& idx) {
        int d = 0;
        for (auto i : idx) d += degs[active[i]];
        if (d > max_degree) return false;
        QSeries ps = (*lifted)[active[idx[0]]];
        for (std::size_t k = 1; k < idx.size(); ++k) ps = series_mul(ps, (*lifted)[active[idx[k]]]);
        auto cand = candidate_from_product(ps, max_degree);
        if (!cand || !accept(*cand)) return false;
        found.push_back(*cand);
        hit = idx;
        return true;
      });
      if (!any) {
        ++s;
        continue;
      }
      for (auto it = hit.rbegin(); it != hit.rend(); ++it) active.erase(active.begin() + *it);
    }
    if (complete && !active.empty()) {
      QSeries ps = (*lifted)[active[0]];
      for (std::size_t k = 1; k < active.size(); ++k) ps = series_mul(ps, (*lifted)[active[k]]);
      auto cand = candidate_from_product(ps, max_degree);
      if (!cand || !accept(*cand)) return std::nullopt;
      found.push_back(*cand);
    }
  }
  return found;
}

// ---- bivariate ---------------------------------------------------------------

namespace {

Integer specialization_point(int i) {
  // 0, 1, -1, 2, -2, ...
  return (i % 2 == 1) ? Integer((i + 1) / 2) : Integer(-(i / 2));
}

UPolyZ content_in_x(const BiPoly& f) {
  // gcd of the coefficients of the powers of Y, each a polynomial in X
  UPolyZ g;
  for (const auto& c : y_coefficients(f)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? primitive_part(c) : univariate_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return positive(g);
}

std::vector<UPolyZ> taylor_series_at(const std::vector<UPolyZ>& ycoeffs, const Integer& t0, std::size_t prec) {
  // ycoeffs[j](t0 + t) truncated at t^prec, regrouped by powers of t
  std::vector<std::vector<Integer>> out(prec, std::vector<Integer>(ycoeffs.size(), Integer(0)));
  for (std::size_t j = 0; j < ycoeffs.size(); ++j) {
    const auto& c = ycoeffs[j].coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      Integer pw = 1;  // t0^(i - k) for k = i down to 0
      for (std::size_t k = i + 1; k-- > 0;) {
        if (k < prec) out[k][j] += c[i] * binomial(i, k) * pw;
        pw *= t0;
        if (t0 == 0) break;
      }
    }
  }
  std::vector<UPolyZ> series;
  for (auto& v : out) series.emplace_back(std::move(v));
  return series;
}

BiPoly integer_form(const BiPoly& f) { return f.normalized(); }

// Factors a primitive squarefree nonconstant integer polynomial.
std::vector<BiPoly> factor_squarefree_bivariate(const BiPoly& s_in) {
  std::vector<BiPoly> out;
  if (s_in.degree_y() == 0 || s_in.degree_x() == 0) {
    const bool in_x = s_in.degree_y() == 0;
    const UPolyZ u = to_integer_poly(in_x ? to_univariate_x(s_in) : to_univariate_y(s_in));
    for (const auto& g : factor_squarefree_univariate(u)) {
      const UPolyQ q = to_rational_poly(g);
      out.push_back(in_x ? from_univariate_x(q) : from_univariate_y(q));
    }
    return out;
  }
  // main variable: the one of smaller degree; internally always Y
  const bool swapped = s_in.degree_x() < s_in.degree_y();
  BiPoly s = swapped ? swap_xy(s_in) : s_in;

  const UPolyZ cont = content_in_x(s);
  if (cont.degree() > 0) {
    for (const auto& g : factor_squarefree_univariate(cont)) out.push_back(from_univariate_x(to_rational_poly(g)));
    s = *exact_divide(s, from_univariate_x(to_rational_poly(cont)));
    s = integer_form(s);
  }
  if (s.degree_y() > 0) {
    const int dmax = s.total_degree();
    const std::size_t prec = std::size_t(2 * dmax + 1);
    const auto ycoeffs = y_coefficients(s);
    bool done = false;
    for (int i = 0; i < 200 && !done; ++i) {
      const Integer t0 = specialization_point(i);
      std::vector<Integer> img(ycoeffs.size());
      for (std::size_t j = 0; j < ycoeffs.size(); ++j) img[j] = ycoeffs[j].evaluate(t0);
      const UPolyZ image(img);
      if (image.degree() != s.degree_y()) continue;
      if (univariate_gcd(image, image.derivative()).degree() > 0) continue;
      const auto series = taylor_series_at(ycoeffs, t0, prec);
      const BiPoly target = s;
      auto accept = [&](const BiPoly& h) { return exact_divide(target, h.shifted(-t0, 0)).has_value(); };
      auto res = factors_from_series(series, dmax, accept, true);
      if (!res) continue;
      for (const auto& h : *res) out.push_back(h.shifted(-t0, 0).normalized());
      done = true;
    }
    if (!done) throw InternalInconsistency("no admissible specialization found");
  }
  for (auto& f : out) f = (swapped ? swap_xy(f) : f).normalized();
  return out;
}

}  // namespace

Factorization squarefree_decompose(const BiPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decompose: zero polynomial");
  Factorization out;
  const BiPoly g = f.normalized();
  out.unit = f.leading_coeff() / g.leading_coeff();
  if (g.is_constant()) return out;

  std::vector<std::pair<BiPoly, unsigned>> parts;
  // the content in Y (a polynomial in Y only) is handled univariately
  std::vector<UPolyZ> xcoeffs = y_coefficients(swap_xy(g));
  UPolyZ cy;
  for (const auto& c : xcoeffs) {
    if (c.is_zero()) continue;
    cy = cy.is_zero() ? primitive_part(c) : univariate_gcd(cy, c);
  }
  cy = positive(cy);
  BiPoly p = g;
  if (cy.degree() > 0) {
    for (const auto& [s, m] : squarefree_univariate(cy)) parts.push_back({from_univariate_y(to_rational_poly(s)), m});
    p = exact_divide(g, from_univariate_y(to_rational_poly(cy)))->normalized();
  }
  if (p.degree_x() > 0) {
    // Yun with respect to X
    const BiPoly dp = p.derivative_x();
    const BiPoly c = poly_gcd(p, dp);
    BiPoly w = *exact_divide(p, c);
    BiPoly y = *exact_divide(dp, c);
    for (unsigned i = 1; w.total_degree() > 0; ++i) {
      const BiPoly z = y - w.derivative_x();
      const BiPoly h = poly_gcd(w, z);
      if (h.total_degree() > 0) parts.push_back({h, i});
      w = *exact_divide(w, h);
      if (z.is_zero()) break;
      y = *exact_divide(z, h);
    }
  }
  // merge equal multiplicities
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  for (const auto& [s, m] : parts) {
    if (!out.factors.empty() && out.factors.back().second == m)
      out.factors.back().first = (out.factors.back().first * s).normalized();
    else
      out.factors.push_back({s.normalized(), m});
  }
  // fix the unit so that the product reconstructs f exactly
  const BiPoly prod = out.expand() / out.unit;
  out.unit = f.leading_coeff() / prod.leading_coeff();
  return out;
}

Factorization factor_univariate(const UPolyQ& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
  auto [unit, g] = split_content(f);
  Factorization out;
  out.unit = unit;
  for (const auto& [s, m] : squarefree_univariate(g))
    for (const auto& h : factor_squarefree_univariate(s)) out.factors.push_back({from_univariate_x(to_rational_poly(h)), m});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

Factorization factor_bivariate(const BiPoly& f) {
  if (f.is_zero() || f.is_constant()) throw std::invalid_argument("factor_bivariate: constant polynomial");
  const Factorization sq = squarefree_decompose(f);
  Factorization out;
  out.unit = sq.unit;
  for (const auto& [s, m] : sq.factors)
    for (const auto& h : factor_squarefree_bivariate(s)) out.factors.push_back({h, m});
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  if (!(out.expand() == f)) throw InternalInconsistency("factorization does not reconstruct its input");
  return out;
}

std::vector<BiPoly> factors_up_to_degree(const BiPoly& f_in, int max_degree) {
  if (f_in.is_zero()) throw std::invalid_argument("factors of the zero polynomial");
  std::vector<BiPoly> out;
  if (max_degree < 1 || f_in.is_constant()) return out;
  const BiPoly f = f_in.normalized();
  const bool swapped = f.degree_x() < f.degree_y();
  const BiPoly s = swapped ? swap_xy(f) : f;

  // factors in X alone come from the content with respect to Y
  const UPolyZ cont = content_in_x(s);
  if (cont.degree() > 0)
    for (const auto& [part, m] : squarefree_univariate(cont))
      for (const auto& g : factor_squarefree_univariate(part, max_degree))
        out.push_back(from_univariate_x(to_rational_poly(g)));

  if (s.degree_y() > 0) {
    std::vector<UPolyZ> ycoeffs = y_coefficients(s);
    if (cont.degree() > 0)
      for (auto& c : ycoeffs) c = *try_exact_div(c, cont);
    const std::size_t prec = std::size_t(2 * max_degree + 1);
    bool done = false;
    for (int i = 0; i < 40 && !done; ++i) {
      const Integer t0 = specialization_point(i);
      if (ycoeffs.back().evaluate(t0) == 0) continue;
      const auto series = taylor_series_at(ycoeffs, t0, prec);
      auto accept = [&](const BiPoly& h) { return exact_divide(s, h.shifted(-t0, 0)).has_value(); };
      auto res = factors_from_series(series, max_degree, accept, false);
      if (!res) continue;
      for (const auto& h : *res) out.push_back(h.shifted(-t0, 0).normalized());
      done = true;
    }
    if (!done) throw InternalInconsistency("no admissible specialization found");
  }
  for (auto& g : out) g = (swapped ? swap_xy(g) : g).normalized();
  sort_canonical(out);
  return out;
}

// ---- absolute factors (Ruppert / Gao) -----------------------------------------

namespace {

unsigned ruppert_dimension(const BiPoly& f) {
  // unknowns: G with deg_X <= m - 1, deg_Y <= n; H with deg_X <= m, deg_Y <= n - 1
  // equation: f G_Y - G f_Y - f H_X + H f_X = 0
  const int m = f.degree_x();
  const int n = f.degree_y();
  std::vector<Monomial> gm, hm;
  for (int i = 0; i <= m - 1; ++i)
    for (int j = 0; j <= n; ++j) gm.push_back({unsigned(i), unsigned(j)});
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n - 1; ++j) hm.push_back({unsigned(i), unsigned(j)});
  const std::size_t cols = gm.size() + hm.size();
  if (cols == 0) return 0;
  const BiPoly fx = f.derivative_x();
  const BiPoly fy = f.derivative_y();
  std::vector<BiPoly> images;
  images.reserve(cols);
  for (const auto& mon : gm) {
    const BiPoly g = BiPoly::monomial(mon);
    images.push_back(f * g.derivative_y() - g * fy);
  }
  for (const auto& mon : hm) {
    const BiPoly h = BiPoly::monomial(mon);
    images.push_back(h * fx - f * h.derivative_x());
  }
  std::map<Monomial, std::size_t, CantorLess> row_of;
  for (const auto& img : images)
    for (const auto& [mon, c] : img.terms()) row_of.emplace(mon, 0);
  std::size_t r = 0;
  for (auto& [mon, idx] : row_of) idx = r++;
  RatMatrix mat(row_of.size(), cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [mon, v] : images[c].terms()) mat(row_of[mon], c) = v;
  return unsigned(cols - rank(mat));
}

}  // namespace

unsigned count_absolute_factors(const BiPoly& f_in) {
  if (f_in.is_zero() || f_in.is_constant()) throw std::invalid_argument("count_absolute_factors: constant input");
  const Factorization sq = squarefree_decompose(f_in);
  for (const auto& [s, m] : sq.factors)
    if (m != 1) throw std::invalid_argument("count_absolute_factors: input is not squarefree");
  BiPoly f = f_in.normalized();
  unsigned count = 0;
  // a factor in Y alone of degree k splits into k distinct linear factors
  std::vector<UPolyZ> xcoeffs = y_coefficients(swap_xy(f));
  UPolyZ cy;
  for (const auto& c : xcoeffs) {
    if (c.is_zero()) continue;
    cy = cy.is_zero() ? primitive_part(c) : univariate_gcd(cy, c);
  }
  if (cy.degree() > 0) {
    count += unsigned(cy.degree());
    f = exact_divide(f, from_univariate_y(to_rational_poly(cy)))->normalized();
  }
  if (f.degree_x() > 0) count += ruppert_dimension(f);
  return count;
}

}  // namespace dbx
