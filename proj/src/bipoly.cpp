#include <dbx/bipoly.hpp>

#include <cmath>
#include <ostream>
#include <sstream>

namespace dbx {

Monomial cantor_inverse(std::uint64_t index) {
  // s(s+1)/2 <= index < (s+1)(s+2)/2
  auto s = static_cast<std::uint64_t>((std::sqrt(8.0 * double(index) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > index) --s;
  while ((s + 1) * (s + 2) / 2 <= index) ++s;
  const std::uint64_t k = index - s * (s + 1) / 2;
  return {static_cast<unsigned>(k), static_cast<unsigned>(s - k)};
}

BiPoly::BiPoly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

BiPoly::BiPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

BiPoly::BiPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

BiPoly BiPoly::x() { return monomial({1, 0}); }
BiPoly BiPoly::y() { return monomial({0, 1}); }

BiPoly BiPoly::monomial(Monomial m, const Rational& c) {
  BiPoly r;
  if (c != 0) r.terms_.emplace(m, c);
  return r;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

int BiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.total());
}

int BiPoly::degree_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.x));
  return d;
}

int BiPoly::degree_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.y));
  return d;
}

Rational BiPoly::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Monomial BiPoly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("leading monomial of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& BiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

bool BiPoly::is_integral() const {
  for (const auto& [m, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Integer BiPoly::height() const {
  Integer h = 0;
  for (const auto& [m, c] : terms_) {
    if (c.get_den() != 1) throw std::domain_error("height needs integer coefficients");
    Integer a = abs_value(c.get_num());
    if (a > h) h = a;
  }
  return h;
}

Integer BiPoly::norm1() const {
  Integer n = 0;
  for (const auto& [m, c] : terms_) {
    if (c.get_den() != 1) throw std::domain_error("norm needs integer coefficients");
    n += abs_value(c.get_num());
  }
  return n;
}

Rational BiPoly::content() const {
  if (terms_.empty()) return 0;
  Integer num = 0;
  Integer den = 1;
  for (const auto& [m, c] : terms_) {
    num = int_gcd(num, c.get_num());
    den = int_lcm(den, c.get_den());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

BiPoly BiPoly::normalized() const {
  if (terms_.empty()) return {};
  Rational c = content();
  if (leading_coeff() < 0) c = -c;
  BiPoly r = *this;
  r /= c;
  return r;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    if (m.x > 0) r.terms_.emplace_hint(r.terms_.end(), Monomial{m.x - 1, m.y}, c * m.x);
  return r;
}

BiPoly BiPoly::derivative_y() const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    if (m.y > 0) r.terms_.emplace(Monomial{m.x, m.y - 1}, c * m.y);
  return r;
}

Rational BiPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (unsigned i = 0; i < m.x; ++i) t *= x;
    for (unsigned j = 0; j < m.y; ++j) t *= y;
    s += t;
  }
  return s;
}

Integer BiPoly::evaluate_integer(const Integer& x, const Integer& y) const {
  const int dx = degree_x();
  const int dy = degree_y();
  if (dx < 0) return 0;
  std::vector<Integer> xp(dx + 1), yp(dy + 1);
  xp[0] = 1;
  yp[0] = 1;
  for (int i = 1; i <= dx; ++i) xp[i] = xp[i - 1] * x;
  for (int j = 1; j <= dy; ++j) yp[j] = yp[j - 1] * y;
  Integer s = 0;
  for (const auto& [m, c] : terms_) {
    if (c.get_den() != 1) throw std::domain_error("integer evaluation needs integer coefficients");
    s += c.get_num() * xp[m.x] * yp[m.y];
  }
  return s;
}

namespace {

// Coefficients of (Z + a)^n, lowest power first.
std::vector<Integer> binomial_row(unsigned n, const Integer& a) {
  std::vector<Integer> row(n + 1);
  Integer apow = 1;
  for (unsigned k = 0; k <= n; ++k) {
    // coefficient of Z^(n-k) is C(n,k) a^k
    row[n - k] = binomial(n, k) * apow;
    apow *= a;
  }
  return row;
}

}  // namespace

BiPoly BiPoly::shifted(const Integer& x0, const Integer& y0) const {
  if (x0 == 0 && y0 == 0) return *this;
  std::map<unsigned, std::vector<Integer>> xrows, yrows;
  for (const auto& [m, c] : terms_) {
    if (!xrows.count(m.x)) xrows.emplace(m.x, binomial_row(m.x, x0));
    if (!yrows.count(m.y)) yrows.emplace(m.y, binomial_row(m.y, y0));
  }
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    const auto& xr = xrows.at(m.x);
    const auto& yr = yrows.at(m.y);
    for (unsigned i = 0; i <= m.x; ++i) {
      if (xr[i] == 0) continue;
      Rational ci = c * xr[i];
      for (unsigned j = 0; j <= m.y; ++j) {
        if (yr[j] == 0) continue;
        r.add_term({i, j}, ci * yr[j]);
      }
    }
  }
  return r;
}

void BiPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  Rational t;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add_term({ma.x + mb.x, ma.y + mb.y}, t);
    }
  }
  return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  *this = *this * o;
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly& BiPoly::operator/=(const Rational& c) {
  if (c == 0) throw std::domain_error("division of a polynomial by zero");
  for (auto& [m, v] : terms_) v /= c;
  return *this;
}

BiPoly pow(const BiPoly& base, long exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial power");
  BiPoly result(1L);
  BiPoly b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

bool canonical_less(const BiPoly& a, const BiPoly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto ia = a.terms().rbegin();
  auto ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return CantorLess{}(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return a.size() < b.size();
}

namespace {

void write_monomial(std::ostream& os, Monomial m) {
  bool first = true;
  auto var = [&](const char* v, unsigned e) {
    if (e == 0) return;
    if (!first) os << '*';
    os << v;
    if (e > 1) os << '^' << e;
    first = false;
  };
  var("X", m.x);
  var("Y", m.y);
}

}  // namespace

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial m = it->first;
    Rational c = it->second;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    if (m == Monomial{}) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << '*';
      write_monomial(os, m);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << f.to_string(); }

}  // namespace dbx
