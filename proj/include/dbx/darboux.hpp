#ifndef DBX_DARBOUX_HPP
#define DBX_DARBOUX_HPP

#include <dbx/derivation.hpp>
#include <dbx/extactic.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dbx {

struct DarbouxReport {
  enum class Outcome { kFinite, kInfiniteFamily };

  Outcome outcome = Outcome::kFinite;
  /// Finite case: all irreducible Darboux polynomials of degree <= N.
  std::vector<DarbouxCertificate> certificates;
  /// Infinite case: smallest n <= N with E_n(D) = 0.
  std::optional<int> minimal_null_degree;
  /// E_N(D); its poly is zero in the infinite case.
  ExtacticCurve extactic;
  int degree_bound_used = 0;
  /// Certificate count reached darboux_count_threshold(d).
  bool threshold_reached = false;
  /// Discarded factors and other remarks, in a fixed order.
  std::vector<std::string> diagnostics;
};

/// Irreducible (over Q) Darboux polynomials of degree <= N, or the infinite
/// family when E_N(D) = 0. Throws std::invalid_argument for N < 1.
DarbouxReport lagutinskii_pereira(const Derivation& d, int n);

/// d (d + 1) / 2 + 2. Throws std::invalid_argument for d < 1.
int darboux_count_threshold(int d);

}  // namespace dbx

#endif  // DBX_DARBOUX_HPP
