#include <dbx/darboux.hpp>
#include <dbx/extactic.hpp>
#include <dbx/io.hpp>
#include <dbx/prellesinger.hpp>
#include <dbx/ratfirstint.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using json = nlohmann::ordered_json;
using namespace dbx;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kPrecondition = 2,
  kInfinite = 3,
  kNotFound = 4,
  kTimeout = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool verify = true;
  double timeout = 0;
};

std::string builtin_system(const std::string& name) {
  if (name == "fixtureA") return "A = -2*X^2\nB = 1 - 4*X*Y\n";
  if (name == "linear2") return "A = 3*X\nB = 2*Y\n";
  const std::string prefix = "exponential";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size()) {
    const std::string rest = name.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") == std::string::npos && rest.size() < 4) {
      const int k = std::stoi(rest);
      if (k >= 2) return format_system(gen_exponential_example(k));
    }
  }
  return {};
}

ParsedSystem load_system(const std::string& source) {
  std::string text;
  if (std::filesystem::exists(source)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw UsageError("cannot read " + source);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = builtin_system(source);
    if (text.empty()) throw UsageError("no such file or built-in system: " + source);
  }
  try {
    return parse_system(text);
  } catch (const ParseError& e) {
    throw UsageError(source + ": " + e.what());
  }
}

json system_json(const ParsedSystem& s) {
  const Derivation& d = s.derivation;
  return json{{"A", d.a().to_string()},
              {"B", d.b().to_string()},
              {"d", d.degree()},
              {"H", d.height().get_str()},
              {"warnings", s.warnings}};
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::kYes: return "yes";
    case Tristate::kNo: return "no";
    default: return "unknown";
  }
}

json certificate_json(const DarbouxCertificate& c) {
  return json{{"f", c.f.to_string()},
              {"degree", c.f.total_degree()},
              {"cofactor", c.cofactor.to_string()},
              {"extactic_multiplicity", c.extactic_multiplicity},
              {"absolutely_irreducible", tristate_name(c.absolutely_irreducible)},
              {"absolute_factor_count", c.absolute_factor_count}};
}

std::string e_name(int n, bool reduced) {
  return reduced ? "E_{" + std::to_string(n) + ",0}" : "E_" + std::to_string(n);
}

void check(bool ok, const std::string& what) {
  if (!ok) throw InternalInconsistency("verification failed: " + what);
}

void require_degree(int n, int min, const std::string& flag) {
  if (n < min) throw PreconditionError(flag + " must be at least " + std::to_string(min));
}

// Each command fills `result` and `text`, and returns the exit code.
struct Output {
  json result = json::object();
  std::ostringstream text;
};

int cmd_extactic(const Derivation& d, int n, bool reduced, const Globals& g, Output& out) {
  require_degree(n, reduced ? 1 : 0, "--n");
  const ExtacticCurve e = reduced ? extactic_reduced(d, n) : extactic_curve(d, n);
  const long l = static_cast<long>(e.basis_size);
  const long dbound = degree_bound_for_length(d.degree(), n, l);
  const Integer hbound = height_bound_for_length(d.degree(), n, d.height(), l);
  const Integer h = e.poly.height();
  if (g.verify && !e.poly.is_zero()) {
    check(e.poly.total_degree() <= dbound, "degree bound");
    check(h <= hbound, "height bound");
  }
  const std::string name = e_name(n, reduced);
  out.result = json{{"name", name},
                    {"n", n},
                    {"reduced", reduced},
                    {"basis_size", e.basis_size},
                    {"poly", e.poly.to_string()},
                    {"vanishes", e.poly.is_zero()},
                    {"degree", e.poly.is_zero() ? json(nullptr) : json(e.poly.total_degree())},
                    {"height", h.get_str()},
                    {"degree_bound", dbound},
                    {"height_bound", hbound.get_str()}};
  if (e.poly.is_zero())
    out.text << name << " = 0, deg bound " << dbound << ", height bound " << hbound.get_str() << "\n";
  else
    out.text << name << " = " << e.poly.to_string() << ", deg " << e.poly.total_degree() << " ≤ bound " << dbound
             << ", height " << h.get_str() << " ≤ bound " << hbound.get_str() << "\n";
  return kOk;
}

int cmd_darboux(const Derivation& d, int n, const Globals& g, Output& out) {
  require_degree(n, 1, "--max-degree");
  const DarbouxReport r = lagutinskii_pereira(d, n);
  const bool infinite = r.outcome == DarbouxReport::Outcome::kInfiniteFamily;
  if (g.verify)
    for (const auto& c : r.certificates) check(verify_certificate(d, c), "D(f) = g f for " + c.f.to_string());
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
  out.result = json{{"outcome", infinite ? "infinite_family" : "finite"},
                    {"max_degree", n},
                    {"minimal_null_degree", r.minimal_null_degree ? json(*r.minimal_null_degree) : json(nullptr)},
                    {"extactic", r.extactic.poly.to_string()},
                    {"degree_bound", r.degree_bound_used},
                    {"threshold", darboux_count_threshold(std::max(d.degree(), 1))},
                    {"threshold_reached", r.threshold_reached},
                    {"certificates", certs},
                    {"diagnostics", r.diagnostics}};
  if (infinite) {
    out.text << "infinite family: " << e_name(*r.minimal_null_degree, false)
             << " = 0, so D has a rational first integral of degree " << *r.minimal_null_degree << "\n";
    return kInfinite;
  }
  out.text << "irreducible Darboux polynomials of degree <= " << n << ": " << r.certificates.size() << "\n";
  for (const auto& c : r.certificates) {
    out.text << "  " << c.f.to_string() << "    cofactor " << c.cofactor.to_string() << "    multiplicity "
             << c.extactic_multiplicity;
    if (c.absolute_factor_count > 1)
      out.text << "    (splits into " << c.absolute_factor_count << " conjugate absolute factors)";
    out.text << "\n";
  }
  for (const auto& s : r.diagnostics) out.text << "  note: " << s << "\n";
  if (r.threshold_reached) out.text << "count reached the Darboux threshold, a first integral exists\n";
  return kOk;
}

json first_integral_json(const RationalFirstIntegral& f) {
  return json{{"p", f.p.to_string()},
              {"q", f.q.to_string()},
              {"degree", f.degree},
              {"shift", {f.shift_used.first, f.shift_used.second}},
              {"iterations", f.iterations},
              {"darboux_factor", f.darboux_factor.to_string()},
              {"cofactor", f.cofactor.to_string()}};
}

int cmd_first_integral(const Derivation& d, int n, const Globals& g, Output& out) {
  require_degree(n, 1, "--max-degree");
  const auto f = rat_first_int(d, n);
  if (!f) {
    out.result = json{{"found", false}, {"max_degree", n}};
    out.text << "none below " << n + 1 << "\n";
    return kNotFound;
  }
  if (g.verify) check(verify_first_integral(d, f->p, f->q), "q D(p) - p D(q) = 0");
  out.result = first_integral_json(*f);
  out.result["found"] = true;
  out.text << "first integral of degree " << f->degree << ": (" << f->p.to_string() << ") / (" << f->q.to_string()
           << ")\n";
  out.text << "shift (" << f->shift_used.first << ", " << f->shift_used.second << "), " << f->iterations
           << (f->iterations == 1 ? " pass" : " passes") << "\n";
  return kOk;
}

std::string product_text(const std::vector<BiPoly>& base, const std::vector<Rational>& exps) {
  std::string s;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += " * ";
    s += "(" + base[i].to_string() + ")";
    if (exps[i] != 1) s += "^(" + exps[i].get_str() + ")";
  }
  return s.empty() ? "1" : s;
}

json power_product_json(const PowerProductCertificate& c) {
  json base = json::array();
  for (const auto& b : c.base) base.push_back(json{{"f", b.f.to_string()}, {"cofactor", b.cofactor.to_string()}});
  json exps = json::array();
  for (const auto& e : c.exponents) exps.push_back(e.get_str());
  json hom = json::array();
  for (const auto& v : c.homogeneous) {
    json row = json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    hom.push_back(row);
  }
  return json{{"base", base}, {"exponents", exps}, {"homogeneous", hom}};
}

int cmd_integrating_factor(const Derivation& d, int max_degree, const Globals& g, Output& out) {
  require_degree(max_degree, 1, "--max-degree");
  const BiPoly div = divergence(d);
  for (int n = 1; n <= max_degree; ++n) {
    const DarbouxReport r = lagutinskii_pereira(d, n);
    if (r.outcome == DarbouxReport::Outcome::kInfiniteFamily) {
      const auto f = rat_first_int(d, n);
      if (!f) throw InternalInconsistency("E_n vanishes but no rational first integral was found");
      if (g.verify) check(verify_first_integral(d, f->p, f->q), "q D(p) - p D(q) = 0");
      out.result = json{{"outcome", "first_integral"}, {"n", n}, {"rational_first_integral", first_integral_json(*f)}};
      out.text << "n = " << n << ": first integral (" << f->p.to_string() << ") / (" << f->q.to_string() << ")\n";
      return kOk;
    }
    std::vector<BiPoly> base;
    for (const auto& c : r.certificates) base.push_back(c.f);
    if (auto fi = solve_log_derivative(r.certificates)) {
      if (g.verify) check(fi->total_cofactor().is_zero(), "sum n_i g_i = 0");
      out.result = json{{"outcome", "first_integral"}, {"n", n}, {"product", power_product_json(*fi)}};
      out.text << "n = " << n << ": first integral " << product_text(base, fi->exponents) << "\n";
      return kOk;
    }
    if (auto inf = solve_integrating_factor(d, r.certificates)) {
      if (g.verify) check(inf->total_cofactor() == -div, "sum n_i g_i = -div(A, B)");
      out.result = json{{"outcome", "integrating_factor"}, {"n", n}, {"product", power_product_json(*inf)}};
      out.text << "n = " << n << ": integrating factor " << product_text(base, inf->exponents) << "\n";
      out.text << "a first integral follows by quadrature: F = int R B dX - int (R A + d/dY int R B dX) dY\n";
      return kOk;
    }
  }
  out.result = json{{"outcome", "failure"}, {"n", max_degree}};
  out.text << "failure\n";
  return kNotFound;
}

int cmd_inverse_integrating_factor(const Derivation& d, int n, const Globals& g, Output& out) {
  require_degree(n, 0, "--degree");
  const auto basis = inverse_integrating_factor(d, n);
  const BiPoly div = divergence(d);
  json arr = json::array();
  for (const auto& r : basis) {
    if (g.verify) check((apply(d, r) - div * r).is_zero(), "A R_X + B R_Y = div(A, B) R");
    arr.push_back(r.to_string());
  }
  out.result = json{{"degree", n}, {"divergence", div.to_string()}, {"basis", arr}};
  out.text << "inverse integrating factors of degree <= " << n << ": " << basis.size() << "\n";
  for (const auto& r : basis) out.text << "  " << r.to_string() << "\n";
  return kOk;
}

void arm_timeout(double seconds) {
  if (seconds <= 0) return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::cerr << "error: timeout after " << seconds << " s\n";
    std::_Exit(kTimeout);
  }).detach();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darboux polynomials, rational first integrals and integrating factors of planar polynomial systems"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print a JSON result document");
  app.add_flag("--verify,!--no-verify", g.verify, "Re-check every returned identity (default on)");
  app.add_option("--timeout", g.timeout, "Abort after this many seconds")->check(CLI::NonNegativeNumber);

  std::string source;
  int n = 0;
  bool reduced = false;
  int bench_d = 0;
  std::string emit;
  bool run = false;
  int bench_degree = 1;

  auto* ext = app.add_subcommand("extactic", "Extactic curve E_N or E_{N,0}");
  ext->add_option("file", source, "System file or built-in name")->required();
  ext->add_option("--n", n, "Degree N")->required();
  ext->add_flag("--reduced", reduced, "Use the constant-free basis");

  auto* dbx = app.add_subcommand("darboux", "Irreducible Darboux polynomials up to a degree");
  dbx->add_option("file", source, "System file or built-in name")->required();
  dbx->add_option("--max-degree", n, "Degree bound N")->required();

  auto* fi = app.add_subcommand("first-integral", "Rational first integral of minimal degree <= N");
  fi->add_option("file", source, "System file or built-in name")->required();
  fi->add_option("--max-degree", n, "Degree bound N")->required();

  auto* inf = app.add_subcommand("integrating-factor", "Prelle-Singer method up to degree N");
  inf->add_option("file", source, "System file or built-in name")->required();
  inf->add_option("--max-degree", n, "Degree bound N")->required();

  auto* iif = app.add_subcommand("inverse-integrating-factor", "Inverse integrating factors of degree <= N");
  iif->add_option("file", source, "System file or built-in name")->required();
  iif->add_option("--degree", n, "Degree bound N")->required();

  auto* bench = app.add_subcommand("bench", "Generated benchmark systems");
  bench->require_subcommand(1);
  auto* bexp = bench->add_subcommand("exponential", "The family Y prod (X + i) + X");
  bexp->add_option("--d", bench_d, "Degree of the system")->required();
  bexp->add_option("--emit", emit, "Write the system to this file");
  bexp->add_flag("--run", run, "Run darboux on the system");
  bexp->add_option("--max-degree", bench_degree, "Degree bound for --run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  arm_timeout(g.timeout);
  const auto start = std::chrono::steady_clock::now();
  Output out;
  int code = kOk;
  std::string command;
  json system;
  json parameters = json::object();
  try {
    std::optional<ParsedSystem> sys;
    if (bexp->parsed()) {
      command = "bench exponential";
      if (bench_d < 2) throw PreconditionError("--d must be at least 2");
      const Derivation d = gen_exponential_example(bench_d);
      sys = ParsedSystem{d, {}};
      parameters = json{{"d", bench_d}};
      if (!emit.empty()) {
        std::ofstream f(emit, std::ios::binary);
        if (!f) throw UsageError("cannot write " + emit);
        f << format_system(d);
      }
      if (run) {
        parameters["max_degree"] = bench_degree;
        code = cmd_darboux(d, bench_degree, g, out);
      } else {
        out.result = json{{"A", d.a().to_string()}, {"B", d.b().to_string()}};
        if (emit.empty())
          out.text << format_system(d);
        else
          out.text << "wrote " << emit << "\n";
      }
    } else {
      sys = load_system(source);
      for (const auto& w : sys->warnings) std::cerr << "warning: " << w << "\n";
      const Derivation& d = sys->derivation;
      if (ext->parsed()) {
        command = "extactic";
        parameters = json{{"n", n}, {"reduced", reduced}};
        code = cmd_extactic(d, n, reduced, g, out);
      } else if (dbx->parsed()) {
        command = "darboux";
        parameters = json{{"max_degree", n}};
        code = cmd_darboux(d, n, g, out);
      } else if (fi->parsed()) {
        command = "first-integral";
        parameters = json{{"max_degree", n}};
        code = cmd_first_integral(d, n, g, out);
      } else if (inf->parsed()) {
        command = "integrating-factor";
        parameters = json{{"max_degree", n}};
        code = cmd_integrating_factor(d, n, g, out);
      } else {
        command = "inverse-integrating-factor";
        parameters = json{{"degree", n}};
        code = cmd_inverse_integrating_factor(d, n, g, out);
      }
    }
    system = system_json(*sys);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (g.json) {
    json doc{{"command", command},
             {"system", system},
             {"parameters", parameters},
             {"result", out.result},
             {"verify", g.verify},
             {"exit_code", code},
             {"timing", {{"seconds", seconds}}}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  return code;
}
