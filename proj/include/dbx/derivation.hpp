#ifndef DBX_DERIVATION_HPP
#define DBX_DERIVATION_HPP

#include <dbx/bipoly.hpp>

#include <optional>
#include <string>

namespace dbx {

/// The derivation D = A d/dX + B d/dY with coprime integer components.
class Derivation {
 public:
  enum class Mode {
    /// Non-coprime components are rejected.
    kStrict,
    /// Components are divided by their gcd first.
    kReduce,
  };

  /// Throws std::invalid_argument when A and B are both zero, have
  /// non-integer coefficients, or (strict mode) share a nonconstant factor.
  Derivation(BiPoly a, BiPoly b, Mode mode = Mode::kStrict);

  const BiPoly& a() const { return a_; }
  const BiPoly& b() const { return b_; }
  /// max(deg A, deg B)
  int degree() const { return degree_; }
  /// max(|A|_inf, |B|_inf)
  const Integer& height() const { return height_; }
  /// The common factor removed in reduce mode (1 otherwise).
  const BiPoly& removed_factor() const { return removed_; }

  /// Canonical text "A=...;B=..." identifying the derivation.
  std::string fingerprint() const;

  friend bool operator==(const Derivation& l, const Derivation& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }

 private:
  BiPoly a_;
  BiPoly b_;
  BiPoly removed_{1L};
  int degree_ = 0;
  Integer height_;
};

/// A * df/dX + B * df/dY
BiPoly apply(const Derivation& d, const BiPoly& f);

/// D applied k times.
BiPoly iterate_apply(const Derivation& d, const BiPoly& f, unsigned k);

/// dA/dX + dB/dY
BiPoly divergence(const Derivation& d);

/// A(X + x0, Y + y0) d/dX + B(X + x0, Y + y0) d/dY
Derivation shift_derivation(const Derivation& d, const Integer& x0, const Integer& y0);

enum class Tristate { kNo, kYes, kUnknown };

/// A Darboux polynomial with its cofactor: D(f) = g * f.
struct DarbouxCertificate {
  BiPoly f;
  BiPoly cofactor;
  unsigned extactic_multiplicity = 0;
  Tristate absolutely_irreducible = Tristate::kUnknown;
  /// Number of absolutely irreducible factors of f, 0 when not computed.
  unsigned absolute_factor_count = 0;
};

/// Certificate when f divides D(f), nullopt (not Darboux) otherwise.
/// f is normalized first. Throws std::invalid_argument for constant f and
/// InternalInconsistency if the cofactor exceeds degree d - 1.
std::optional<DarbouxCertificate> cofactor_of(const Derivation& d, const BiPoly& f);

/// Exact re-check of D(f) = g * f.
bool verify_certificate(const Derivation& d, const DarbouxCertificate& c);

/// Hamiltonian derivation of F = Y * prod_{i=1}^{k-1} (X + i) + X, for
/// k >= 2. The X + i are Darboux polynomials and F is a first integral.
Derivation gen_exponential_example(int k);

/// The polynomial F above.
BiPoly exponential_example_integral(int k);

/// (n + 1) X d/dX + n Y d/dY, for n >= 1; X^n - Y^(n+1) is Darboux and
/// X^n / Y^(n+1) a first integral.
Derivation gen_linear_example(int n);

/// Hamiltonian derivation (dF/dY) d/dX - (dF/dX) d/dY, reduce mode.
Derivation hamiltonian(const BiPoly& f);

}  // namespace dbx

#endif  // DBX_DERIVATION_HPP
