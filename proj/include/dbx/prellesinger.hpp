#ifndef DBX_PRELLESINGER_HPP
#define DBX_PRELLESINGER_HPP

#include <dbx/derivation.hpp>
#include <dbx/linalg.hpp>

#include <optional>
#include <vector>

namespace dbx {

/// prod f_i^n_i built from Darboux certificates.
struct PowerProductCertificate {
  enum class Kind { kFirstIntegral, kIntegratingFactor };

  Kind kind = Kind::kFirstIntegral;
  std::vector<DarbouxCertificate> base;
  /// Integers whenever an integer solution was found.
  std::vector<Rational> exponents;
  /// Integrating factor case: basis of the solutions of sum n_i g_i = 0.
  std::vector<IntVector> homogeneous;

  /// sum n_i g_i
  BiPoly total_cofactor() const;
};

/// Nonzero integer exponents with sum n_i g_i = 0, or nullopt.
std::optional<PowerProductCertificate> solve_log_derivative(const std::vector<DarbouxCertificate>& certs);

/// Exponents with sum n_i g_i = -div(A, B), or nullopt. Prefers integer
/// solutions of small support, then small 1-norm.
std::optional<PowerProductCertificate> solve_integrating_factor(const Derivation& d,
                                                                const std::vector<DarbouxCertificate>& certs);

/// Basis of {R : deg R <= N, A R_X + B R_Y = div(A, B) R}.
/// Throws std::invalid_argument for N < 0.
std::vector<BiPoly> inverse_integrating_factor(const Derivation& d, int n);

}  // namespace dbx

#endif  // DBX_PRELLESINGER_HPP
