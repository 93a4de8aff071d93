#include <dbx/darboux.hpp>
#include <dbx/extactic.hpp>
#include <dbx/factor.hpp>
#include <dbx/io.hpp>
#include <dbx/prellesinger.hpp>
#include <dbx/ratfirstint.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace dbx;

// Polynomials cross the boundary as strings in the canonical expression
// syntax; big integers and rationals as decimal strings.

namespace {

BiPoly poly(const std::string& s) { return parse_polynomial(s, true); }

py::dict certificate_dict(const DarbouxCertificate& c) {
  py::dict d;
  d["f"] = c.f.to_string();
  d["cofactor"] = c.cofactor.to_string();
  d["extactic_multiplicity"] = c.extactic_multiplicity;
  d["absolute_factor_count"] = c.absolute_factor_count;
  return d;
}

std::vector<DarbouxCertificate> certificates_from(const Derivation& d, const std::vector<std::string>& fs) {
  std::vector<DarbouxCertificate> out;
  for (const auto& s : fs) {
    auto c = cofactor_of(d, poly(s));
    if (!c) throw std::invalid_argument(s + " is not a Darboux polynomial");
    out.push_back(*c);
  }
  return out;
}

py::object power_product(const std::optional<PowerProductCertificate>& c) {
  if (!c) return py::none();
  py::dict d;
  std::vector<std::string> base, exps;
  for (const auto& b : c->base) base.push_back(b.f.to_string());
  for (const auto& e : c->exponents) exps.push_back(e.get_str());
  std::vector<std::vector<std::string>> hom;
  for (const auto& v : c->homogeneous) {
    hom.emplace_back();
    for (const auto& x : v) hom.back().push_back(x.get_str());
  }
  d["base"] = base;
  d["exponents"] = exps;
  d["homogeneous"] = hom;
  return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_darbouxkit, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  m.def("normalize_polynomial", [](const std::string& s) { return poly(s).to_string(); });

  py::class_<Derivation>(m, "Derivation")
      .def(py::init([](const std::string& a, const std::string& b, bool reduce) {
             return Derivation(poly(a), poly(b), reduce ? Derivation::Mode::kReduce : Derivation::Mode::kStrict);
           }),
           py::arg("A"), py::arg("B"), py::arg("reduce") = false)
      .def_property_readonly("A", [](const Derivation& d) { return d.a().to_string(); })
      .def_property_readonly("B", [](const Derivation& d) { return d.b().to_string(); })
      .def_property_readonly("degree", &Derivation::degree)
      .def_property_readonly("height", [](const Derivation& d) { return d.height().get_str(); })
      .def("apply", [](const Derivation& d, const std::string& f) { return apply(d, poly(f)).to_string(); })
      .def("divergence", [](const Derivation& d) { return divergence(d).to_string(); })
      .def("__repr__", [](const Derivation& d) { return "Derivation(A=" + d.a().to_string() + ", B=" + d.b().to_string() + ")"; });

  m.def("parse_system", [](const std::string& text) { return parse_system(text).derivation; });
  m.def("gen_exponential_example", &gen_exponential_example, py::arg("k"));
  m.def("gen_linear_example", &gen_linear_example, py::arg("n"));

  m.def(
      "extactic_curve",
      [](const Derivation& d, int n, bool reduced) {
        return (reduced ? extactic_reduced(d, n) : extactic_curve(d, n)).poly.to_string();
      },
      py::arg("d"), py::arg("n"), py::arg("reduced") = false);
  m.def("degree_bound", &degree_bound, py::arg("d"), py::arg("n"));
  m.def(
      "height_bound",
      [](int d, int n, const std::string& h) { return height_bound(d, n, Integer(h)).get_str(); },
      py::arg("d"), py::arg("n"), py::arg("height"));

  m.def(
      "factor",
      [](const std::string& f) {
        const Factorization fac = factor_bivariate(poly(f));
        std::vector<std::pair<std::string, unsigned>> out;
        for (const auto& [g, e] : fac.factors) out.emplace_back(g.to_string(), e);
        return std::make_pair(fac.unit.get_str(), out);
      },
      py::arg("f"));

  m.def(
      "cofactor_of",
      [](const Derivation& d, const std::string& f) -> py::object {
        auto c = cofactor_of(d, poly(f));
        if (!c) return py::none();
        return py::str(c->cofactor.to_string());
      },
      py::arg("d"), py::arg("f"));

  m.def(
      "lagutinskii_pereira",
      [](const Derivation& d, int n) {
        const DarbouxReport r = lagutinskii_pereira(d, n);
        py::dict out;
        const bool infinite = r.outcome == DarbouxReport::Outcome::kInfiniteFamily;
        out["outcome"] = infinite ? "infinite_family" : "finite";
        out["minimal_null_degree"] = r.minimal_null_degree ? py::object(py::int_(*r.minimal_null_degree)) : py::none();
        py::list certs;
        for (const auto& c : r.certificates) certs.append(certificate_dict(c));
        out["certificates"] = certs;
        out["diagnostics"] = r.diagnostics;
        out["threshold_reached"] = r.threshold_reached;
        return out;
      },
      py::arg("d"), py::arg("n"));

  m.def(
      "rat_first_int",
      [](const Derivation& d, int n) -> py::object {
        const auto f = rat_first_int(d, n);
        if (!f) return py::none();
        py::dict out;
        out["p"] = f->p.to_string();
        out["q"] = f->q.to_string();
        out["degree"] = f->degree;
        out["shift"] = f->shift_used;
        out["iterations"] = f->iterations;
        return std::move(out);
      },
      py::arg("d"), py::arg("n"));
  m.def(
      "verify_first_integral",
      [](const Derivation& d, const std::string& p, const std::string& q) {
        return verify_first_integral(d, poly(p), poly(q));
      },
      py::arg("d"), py::arg("p"), py::arg("q"));

  m.def(
      "solve_log_derivative",
      [](const Derivation& d, const std::vector<std::string>& fs) {
        return power_product(solve_log_derivative(certificates_from(d, fs)));
      },
      py::arg("d"), py::arg("darboux_polynomials"));
  m.def(
      "solve_integrating_factor",
      [](const Derivation& d, const std::vector<std::string>& fs) {
        return power_product(solve_integrating_factor(d, certificates_from(d, fs)));
      },
      py::arg("d"), py::arg("darboux_polynomials"));
  m.def(
      "inverse_integrating_factor",
      [](const Derivation& d, int n) {
        std::vector<std::string> out;
        for (const auto& r : inverse_integrating_factor(d, n)) out.push_back(r.to_string());
        return out;
      },
      py::arg("d"), py::arg("n"));
}
