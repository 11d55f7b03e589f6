#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "eckart/expansion.hpp"
#include "eckart/mesh.hpp"
#include "eckart/spectra.hpp"
#include "eckart/specfun.hpp"
#include "eckart/verify.hpp"

namespace eckart::cli {

namespace {

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format;
  std::string out_path;
  double tol = 1e-7;
};

/// A scalar read from the command line, kept exact when it parses as a rational.
struct Number {
  std::optional<Rational> exact;
  double value = 0.0;
};

Number parse_number(const std::string& text) {
  try {
    Rational r = parse_rational(text);
    return {r, to_double(r)};
  } catch (const std::invalid_argument&) {
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw usage_error("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) throw usage_error("not a number: '" + text + "'");
  return {std::nullopt, v};
}

Rational parse_exact(const std::string& text, const char* what) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw usage_error(std::string(what) + " must be rational (p/q or decimal), got '" + text + "'");
  }
}

std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(16) << v;
  return os.str();
}

/// A computed value: exact when every input was rational and the result is
/// rational by construction, floating otherwise.
struct Value {
  std::optional<Gaussian> exact;
  std::complex<double> approx;

  std::string text() const {
    if (exact) {
      if (exact->is_real()) return to_string(exact->re());
      return to_string(*exact);
    }
    const double scale = std::abs(approx);
    if (std::abs(approx.imag()) <= 1e-15 * std::max(scale, 1.0)) return format_real(approx.real());
    std::ostringstream os;
    os << format_real(approx.real()) << (approx.imag() < 0 ? "-" : "+") << format_real(std::abs(approx.imag()))
       << "i";
    return os.str();
  }
};

// Exact value of a coupling-free expression at t = 0, where c = 1 and s = 0.
std::optional<Gaussian> exact_at_origin(const SurfaceExpression& f, const Number& phi) {
  if (!f.is_coupling_free()) return std::nullopt;
  if (f.phase() != 0 && !(phi.exact && *phi.exact == 0)) return std::nullopt;
  Gaussian acc(0);
  for (const auto& [m, coeff] : f.terms()) {
    if (m.s_power == 0) acc += coeff[0];
  }
  return acc;
}

Value evaluate_surface(const SurfaceExpression& f, const Number& t, const Number& phi) {
  const bool hyp = f.signature() == Signature::Hyperbolic;
  if (hyp && t.value < 0.0) throw usage_error("hyperbolic angle must be non-negative");
  bool negative_s = false;
  for (const auto& [m, coeff] : f.terms()) negative_s = negative_s || m.s_power < 0;
  const double s = hyp ? std::sinh(t.value) : std::sin(t.value);
  if (negative_s && std::abs(s) < 1e-12) {
    throw usage_error("singular evaluation point t = " + format_real(t.value));
  }
  Value v;
  v.approx = evaluate(f, t.value, phi.value);
  if (t.exact && *t.exact == 0) v.exact = exact_at_origin(f, phi);
  return v;
}

struct EvalArgs {
  std::string fn;
  int l = -1;
  int m = -1;
  int n = -1;
  int mt = 0;
  std::string b = "0";
  std::string alpha = "0";
  std::string beta = "0";
  std::string gamma = "0";
  std::string delta = "0";
  std::string at;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw usage_error(message);
}

Value run_eval(const EvalArgs& a) {
  require(!a.at.empty(), "--at is required");
  const auto parts = split(a.at, ',');
  require(parts.size() == 1 || parts.size() == 2, "--at takes 't' or 't,phi'");
  const Number t = parse_number(parts[0]);
  const Number phi = parts.size() == 2 ? parse_number(parts[1]) : Number{Rational(0), 0.0};

  auto legendre_index = [&]() {
    require(a.l >= 0 && a.m >= 0 && a.m <= a.l, "need 0 <= m <= l (got l=" + std::to_string(a.l) +
                                                    ", m=" + std::to_string(a.m) + ")");
    return LegendreIndex{a.l, a.m};
  };

  if (a.fn == "legendre-hyp") return evaluate_surface(legendre_hyp_exact(legendre_index()), t, phi);
  if (a.fn == "legendre-trig") return evaluate_surface(legendre_trig_exact(legendre_index()), t, phi);
  if (a.fn == "harmonic") return evaluate_surface(pseudo_spherical_harmonic(legendre_index()), t, phi);
  if (a.fn == "eigenfunction") {
    require(a.l >= 0 && std::abs(a.mt) <= a.l, "need |mt| <= l");
    const Rational b = parse_exact(a.b, "--b");
    return evaluate_surface(eckart_eigenfunction(a.l, a.mt, b).expression, t, phi);
  }
  if (a.fn == "jacobi" || a.fn == "romanovski") {
    require(a.n >= 0, "--n must be a non-negative integer");
    require(parts.size() == 1, "--at takes a single point for polynomial families");
    if (a.fn == "jacobi") {
      const JacobiParams p{parse_exact(a.gamma, "--gamma"), parse_exact(a.delta, "--delta")};
      if (t.exact) return {Gaussian(jacobi_poly(a.n, p, *t.exact)), {}};
      return {std::nullopt, jacobi_poly(a.n, p, t.value)};
    }
    const RomanovskiParams p{parse_exact(a.alpha, "--alpha"), parse_exact(a.beta, "--beta")};
    const RationalPoly r = romanovski_poly(a.n, p);
    if (t.exact) return {Gaussian(r(*t.exact)), {}};
    return {std::nullopt, r.evaluate(t.value)};
  }
  throw usage_error("unknown --fn '" + a.fn + "'");
}

std::string render_eval(const EvalArgs& a, const Value& v, const std::string& format) {
  if (format == "json") {
    nlohmann::json j{{"fn", a.fn}, {"at", a.at}, {"value", v.text()}, {"exact", v.exact.has_value()}};
    if (!v.exact) j["re"] = v.approx.real(), j["im"] = v.approx.imag();
    return j.dump(2) + "\n";
  }
  if (format == "csv") return "fn,at,value,exact\n" + a.fn + ",\"" + a.at + "\"," + v.text() + "," +
                              (v.exact ? "true" : "false") + "\n";
  return v.text() + "\n";
}

std::string render_spectrum(const std::vector<SpectrumEntry>& table, const std::string& format) {
  if (format == "json") return spectrum_to_json(table);
  if (format == "csv") return spectrum_to_csv(table);
  std::ostringstream os;
  os << std::left << std::setw(4) << "l" << std::setw(10) << "b" << std::setw(14) << "alpha_l" << std::setw(16)
     << "epsilon" << std::setw(16) << "epsilon_rm" << std::setw(16) << "gamma" << std::setw(16) << "delta"
     << "degeneracy\n";
  for (const auto& e : table) {
    os << std::setw(4) << e.l << std::setw(10) << to_string(e.b) << std::setw(14) << to_string(e.alpha_l)
       << std::setw(16) << to_string(e.epsilon) << std::setw(16) << to_string(e.epsilon_rm) << std::setw(16)
       << to_string(e.gamma_l) << std::setw(16) << to_string(e.delta_l) << e.degeneracy << '\n';
  }
  return os.str();
}

std::string render_mesh(const MeshSurface& mesh, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json j{{"kind", to_string(mesh.kind)}, {"b", mesh.b}, {"n_t", mesh.n_t}, {"n_phi", mesh.n_phi}};
    j["t"] = mesh.t_values;
    j["points"] = mesh.points;
    os << j.dump() << '\n';
  } else if (format == "text") {
    write_obj(mesh, os);
  } else {
    write_csv(mesh, os);
  }
  return os.str();
}

std::vector<Rational> parse_coupling_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    for (const auto& part : split(item, ',')) out.push_back(parse_exact(part, "--b"));
  }
  return out;
}

void emit(const std::string& text, const Globals& g, std::ostream& out) {
  if (g.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out_path);
  if (!file) throw usage_error("cannot open '" + g.out_path + "' for writing");
  file << text;
  if (!file.flush()) throw usage_error("failed writing '" + g.out_path + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numeric tools for the Eckart / Rosen-Morse angular problems", "eckart"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out_path, "Write output to this path instead of stdout");
  app.add_option("--tol", g.tol, "Relative tolerance of the numeric verification checks")
      ->check(CLI::PositiveNumber);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a special function or eigenfunction");
  eval->add_option("--fn", ev.fn, "Function")
      ->required()
      ->check(CLI::IsMember({"legendre-hyp", "legendre-trig", "jacobi", "romanovski", "harmonic", "eigenfunction"}));
  eval->add_option("--l", ev.l, "Degree l");
  eval->add_option("--m", ev.m, "Order m");
  eval->add_option("--n", ev.n, "Polynomial degree n");
  eval->add_option("--mt", ev.mt, "Azimuthal quantum number of the eigenfunction");
  eval->add_option("--b", ev.b, "Coupling b (rational)");
  eval->add_option("--alpha", ev.alpha, "Romanovski alpha (rational)");
  eval->add_option("--beta", ev.beta, "Romanovski beta (rational)");
  eval->add_option("--gamma", ev.gamma, "Jacobi gamma (rational)");
  eval->add_option("--delta", ev.delta, "Jacobi delta (rational)");
  eval->add_option("--at", ev.at, "Evaluation point: 't', 't,phi' or 'x'")->required();

  int coeff_l = 0;
  std::string coeff_b = "1";
  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient matrix of level l");
  coeffs->add_option("--l", coeff_l, "Level l")->required()->check(CLI::NonNegativeNumber);
  coeffs->add_option("--b", coeff_b, "Coupling b (rational)");

  int spec_lmax = 0;
  std::string spec_b = "1";
  auto* spectrum = app.add_subcommand("spectrum", "Print the closed-form spectrum up to lmax");
  spectrum->add_option("--lmax", spec_lmax, "Largest l")->required()->check(CLI::NonNegativeNumber);
  spectrum->add_option("--b", spec_b, "Coupling b (rational)");

  VerifyOptions vo;
  std::string suite = "all";
  std::vector<std::string> couplings;
  std::optional<int> grid_n, fd_order;
  std::optional<double> eta_min, eta_max, theta_min, theta_max;
  bool no_numeric = false;
  auto* verify = app.add_subcommand("verify", "Check the identities and report one line per case");
  verify->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"recurrences", "eigen", "decompositions", "romanovski", "complexify", "all"}));
  verify->add_option("--lmax", vo.l_max, "Largest l (and n)")->check(CLI::NonNegativeNumber);
  verify->add_option("--b", couplings, "Coupling values, comma separated or repeated (default 1/2,1,2)");
  verify->add_option("--grid-n", grid_n, "Grid points of the finite-difference checks");
  verify->add_option("--fd-order", fd_order, "Finite-difference stencil order");
  verify->add_option("--eta-min", eta_min, "Lower end of the hyperbolic grid");
  verify->add_option("--eta-max", eta_max, "Upper end of the hyperbolic grid");
  verify->add_option("--theta-min", theta_min, "Lower end of the spherical grid");
  verify->add_option("--theta-max", theta_max, "Upper end of the spherical grid");
  verify->add_flag("--no-numeric", no_numeric, "Skip the finite-difference checks");
  verify->add_option("--threads", vo.threads, "Worker threads (0 = hardware concurrency)");

  MeshOptions mo;
  std::string kind = "hyperboloid-deformed";
  std::optional<double> t_min, t_max;
  auto* mesh = app.add_subcommand("mesh", "Export the free or deformed surface as points");
  mesh->add_option("--kind", kind, "Surface kind")
      ->check(CLI::IsMember({"hyperboloid-free", "hyperboloid-deformed", "sphere-free", "sphere-deformed"}));
  mesh->add_option("--b", mo.b, "Coupling b (default 1)");
  mesh->add_option("--tmin", t_min, "Lower end of eta (or theta)");
  mesh->add_option("--tmax", t_max, "Upper end of eta (or theta); default 2.5 (or pi)");
  mesh->add_option("--nt", mo.n_t, "Points along eta (or theta)");
  mesh->add_option("--nphi", mo.n_phi, "Points along phi");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream diag;
    const int code = app.exit(e, out, diag);
    err << diag.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) {
      const Value v = run_eval(ev);
      emit(render_eval(ev, v, g.format.empty() ? "text" : g.format), g, out);
      return kOk;
    }
    if (coeffs->parsed()) {
      const CoeffMatrix m = coeff_matrix(coeff_l, parse_exact(coeff_b, "--b"));
      const std::string fmt = g.format.empty() ? "text" : g.format;
      emit(fmt == "json" ? to_json(m) : fmt == "csv" ? to_csv(m) : to_text(m), g, out);
      return kOk;
    }
    if (spectrum->parsed()) {
      emit(render_spectrum(spectrum_table(spec_lmax, parse_exact(spec_b, "--b")), g.format.empty() ? "text" : g.format),
           g, out);
      return kOk;
    }
    if (verify->parsed()) {
      vo.suite = parse_suite(suite);
      vo.tol = g.tol;
      vo.numeric = !no_numeric;
      if (!couplings.empty()) vo.couplings = parse_coupling_list(couplings);
      GridSpec hyp = default_grid(Signature::Hyperbolic);
      GridSpec trig = default_grid(Signature::Trigonometric);
      for (GridSpec* gs : {&hyp, &trig}) {
        if (grid_n) gs->n = *grid_n;
        if (fd_order) gs->fd_order = *fd_order;
      }
      if (eta_min) hyp.t_min = *eta_min;
      if (eta_max) hyp.t_max = *eta_max;
      if (theta_min) trig.t_min = *theta_min;
      if (theta_max) trig.t_max = *theta_max;
      vo.hyperbolic_grid = hyp;
      vo.trigonometric_grid = trig;
      const auto reports = run_verify(vo);
      const std::string fmt = g.format.empty() ? "text" : g.format;
      emit(fmt == "json" ? reports_to_json(reports) : fmt == "csv" ? reports_to_csv(reports) : reports_to_text(reports),
           g, out);
      return all_pass(reports) ? kOk : kVerifyFailed;
    }
    if (mesh->parsed()) {
      mo.kind = parse_mesh_kind(kind);
      if (t_min) mo.t_min = *t_min;
      if (t_max) mo.t_max = *t_max;
      const MeshSurface surface = generate_mesh(mo);
      emit(render_mesh(surface, g.format.empty() ? "csv" : g.format), g, out);
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace eckart::cli
