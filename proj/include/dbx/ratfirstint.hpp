#ifndef DBX_RATFIRSTINT_HPP
#define DBX_RATFIRSTINT_HPP

#include <dbx/derivation.hpp>
#include <dbx/linalg.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace dbx {

/// A first integral p / q with D(p / q) = 0.
struct RationalFirstIntegral {
  BiPoly p;
  BiPoly q;
  int degree = 0;
  std::pair<long, long> shift_used{0, 0};
  /// Passes of the shift loop, counting the successful one.
  long iterations = 0;
  /// The Darboux factor of E_{n,0}(D_k) the integral was built from, and its
  /// cofactor, both in shifted coordinates.
  BiPoly darboux_factor;
  BiPoly cofactor;
};

/// Matrix of f -> D(f) - g f from degree <= n to degree <= n + d - 1, both
/// with cantor-ordered monomial coordinates. Throws std::invalid_argument
/// when deg g > d - 1 or n < 0.
RatMatrix cofactor_map_matrix(const Derivation& d, const BiPoly& g, int n);

/// Basis of {f : deg f <= n, D(f) = g f}, normalized.
std::vector<BiPoly> kernel_of_cofactor_map(const Derivation& d, const BiPoly& g, int n);

/// q D(p) - p D(q) = 0. Throws std::invalid_argument for q = 0.
bool verify_first_integral(const Derivation& d, const BiPoly& p, const BiPoly& q);

/// A rational first integral of minimal degree n <= N, or nullopt when
/// E_N(D) != 0 (none of degree <= N exists). Throws std::invalid_argument
/// for N < 1 and InternalInconsistency if the shift loop exceeds N^6 passes
/// or the kernel dimension is not 2.
std::optional<RationalFirstIntegral> rat_first_int(const Derivation& d, int n);

}  // namespace dbx

#endif  // DBX_RATFIRSTINT_HPP
