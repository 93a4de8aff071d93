#include <dbx/darboux.hpp>

#include <dbx/factor.hpp>
#include <dbx/polyalg.hpp>

#include <algorithm>
#include <stdexcept>

namespace dbx {

namespace {

// Above this degree E_N is only searched for its low-degree factors.
constexpr int kFullFactorizationDegree = 80;

}  // namespace

int darboux_count_threshold(int d) {
  if (d < 1) throw std::invalid_argument("darboux_count_threshold: d must be at least 1");
  return d * (d + 1) / 2 + 2;
}

DarbouxReport lagutinskii_pereira(const Derivation& d, int n) {
  if (n < 1) throw std::invalid_argument("lagutinskii_pereira: N must be at least 1");
  DarbouxReport report;
  report.degree_bound_used = n;
  report.extactic = extactic_curve(d, n);
  const BiPoly& e = report.extactic.poly;
  if (e.is_zero()) {
    report.outcome = DarbouxReport::Outcome::kInfiniteFamily;
    report.minimal_null_degree = minimal_null_degree(d, n);
    return report;
  }
  if (e.is_constant()) return report;

  std::vector<std::pair<BiPoly, unsigned>> candidates;
  if (e.total_degree() <= kFullFactorizationDegree) {
    for (const auto& [f, m] : factor_bivariate(e).factors) {
      if (f.total_degree() > n) {
        report.diagnostics.push_back("discarded factor of degree " + std::to_string(f.total_degree()) + ": " +
                                     f.to_string());
        continue;
      }
      candidates.push_back({f, m});
    }
  } else {
    for (const auto& f : factors_up_to_degree(e, n)) candidates.push_back({f, multiplicity_of(e, f)});
    report.diagnostics.push_back("factors of degree > " + std::to_string(n) + " not computed (E has degree " +
                                 std::to_string(e.total_degree()) + ")");
  }

  for (const auto& [f, m] : candidates) {
    auto cert = cofactor_of(d, f);
    if (!cert) {
      report.diagnostics.push_back("rejected, does not divide its derivative: " + f.to_string());
      continue;
    }
    cert->extactic_multiplicity = m;
    const unsigned count = count_absolute_factors(cert->f);
    cert->absolute_factor_count = count;
    cert->absolutely_irreducible = count == 1 ? Tristate::kYes : Tristate::kNo;
    if (count > 1)
      report.diagnostics.push_back("factor " + cert->f.to_string() + " splits into " + std::to_string(count) +
                                   " conjugate absolute factors");
    if (!verify_certificate(d, *cert)) throw InternalInconsistency("certificate failed its identity check");
    report.certificates.push_back(std::move(*cert));
  }
  std::sort(report.certificates.begin(), report.certificates.end(),
            [](const DarbouxCertificate& a, const DarbouxCertificate& b) { return canonical_less(a.f, b.f); });
  report.threshold_reached = int(report.certificates.size()) >= darboux_count_threshold(std::max(1, d.degree()));
  return report;
}

}  // namespace dbx
