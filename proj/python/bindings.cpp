#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eckart/expansion.hpp"
#include "eckart/mesh.hpp"
#include "eckart/spectra.hpp"
#include "eckart/specfun.hpp"
#include "eckart/verify.hpp"

namespace py = pybind11;
using namespace eckart;

// Rationals cross the boundary as "p/q" strings; the Python layer converts
// them to fractions.Fraction.

namespace {

std::vector<std::string> to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(to_string(r));
  return out;
}

std::vector<std::vector<std::string>> coeffs(int l, const std::string& b) {
  const CoeffMatrix m = coeff_matrix(l, parse_rational(b));
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : m.entries) rows.push_back(to_strings(row));
  return rows;
}

std::vector<py::dict> spectrum(int l_max, const std::string& b) {
  std::vector<py::dict> rows;
  for (const SpectrumEntry& e : spectrum_table(l_max, parse_rational(b))) {
    py::dict d;
    d["l"] = e.l;
    d["b"] = to_string(e.b);
    d["alpha_l"] = to_string(e.alpha_l);
    d["epsilon"] = to_string(e.epsilon);
    d["epsilon_rm"] = to_string(e.epsilon_rm);
    d["gamma"] = to_string(e.gamma_l);
    d["delta"] = to_string(e.delta_l);
    d["degeneracy"] = e.degeneracy;
    rows.push_back(std::move(d));
  }
  return rows;
}

std::complex<double> eigenfunction(int l, int m_tilde, const std::string& b, double t, double phi) {
  if (t < 0.0) throw std::invalid_argument("t must be non-negative");
  return evaluate(eckart_eigenfunction(l, m_tilde, parse_rational(b)).expression, t, phi);
}

std::vector<py::dict> verify(const std::string& suite, int l_max, const std::vector<std::string>& couplings, double tol,
                             bool numeric, int threads) {
  VerifyOptions o;
  o.suite = parse_suite(suite);
  o.l_max = l_max;
  o.couplings.clear();
  for (const auto& b : couplings) o.couplings.push_back(parse_rational(b));
  o.tol = tol;
  o.numeric = numeric;
  o.threads = threads;
  std::vector<VerifyReport> reports;
  {
    py::gil_scoped_release release;
    reports = run_verify(o);
  }
  std::vector<py::dict> out;
  for (const auto& r : reports) {
    py::dict d;
    d["identity"] = r.identity;
    d["pass"] = r.pass;
    d["parameters"] = r.parameters;
    d["witness"] = r.witness;
    out.push_back(std::move(d));
  }
  return out;
}

py::array_t<double> mesh(const std::string& kind, double b, double t_min, double t_max, int n_t, int n_phi) {
  MeshOptions o;
  o.kind = parse_mesh_kind(kind);
  o.b = b;
  o.t_min = t_min;
  o.t_max = t_max;
  o.n_t = n_t;
  o.n_phi = n_phi;
  const MeshSurface m = generate_mesh(o);
  py::array_t<double> out({static_cast<py::ssize_t>(m.points.size()), py::ssize_t{3}});
  auto view = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.points.size(); ++i) {
    for (int k = 0; k < 3; ++k) view(static_cast<py::ssize_t>(i), k) = m.points[i][k];
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_eckart, mod) {
  mod.doc() = "Exact Eckart/Rosen-Morse eigenfunction kernel";

  py::register_exception<identity_failure>(mod, "IdentityFailure", PyExc_ArithmeticError);

  mod.def("coeff_matrix", &coeffs, py::arg("l"), py::arg("b"));
  mod.def("coeff_matrix_text", [](int l, const std::string& b) { return to_text(coeff_matrix(l, parse_rational(b))); },
          py::arg("l"), py::arg("b"));
  mod.def("recurrence_constant", [](int l, int m) { return to_string(recurrence_constant(l, m)); }, py::arg("l"),
          py::arg("m"));
  mod.def("alpha_l", [](int l, const std::string& b) { return to_string(alpha_l(l, parse_rational(b))); },
          py::arg("l"), py::arg("b"));
  mod.def("eckart_energy", [](int l, const std::string& b) { return to_string(eckart_energy(l, parse_rational(b))); },
          py::arg("l"), py::arg("b"));
  mod.def("rosen_morse_energy",
          [](int l, const std::string& b) { return to_string(rosen_morse_energy(l, parse_rational(b))); },
          py::arg("l"), py::arg("b"));
  mod.def("degeneracy", &degeneracy, py::arg("l"));
  mod.def("spectrum", &spectrum, py::arg("l_max"), py::arg("b"));

  mod.def("legendre_hyp", [](int l, int m, double t) {
    if (t < 0.0) throw std::invalid_argument("t must be non-negative");
    return evaluate(legendre_hyp_exact({l, m}), t).real();
  }, py::arg("l"), py::arg("m"), py::arg("t"));
  mod.def("legendre_trig", [](int l, int m, double theta) { return evaluate(legendre_trig_exact({l, m}), theta).real(); },
          py::arg("l"), py::arg("m"), py::arg("theta"));
  mod.def("jacobi", [](int n, const std::string& gamma, const std::string& delta, const std::string& x) {
    return to_string(jacobi_poly(n, {parse_rational(gamma), parse_rational(delta)}, parse_rational(x)));
  }, py::arg("n"), py::arg("gamma"), py::arg("delta"), py::arg("x"));
  mod.def("romanovski", [](int n, const std::string& alpha, const std::string& beta, const std::string& x) {
    return to_string(romanovski_poly(n, {parse_rational(alpha), parse_rational(beta)})(parse_rational(x)));
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("x"));
  mod.def("romanovski_coefficients", [](int n, const std::string& alpha, const std::string& beta) {
    return to_strings(romanovski_poly(n, {parse_rational(alpha), parse_rational(beta)}).coefficients());
  }, py::arg("n"), py::arg("alpha"), py::arg("beta"));

  mod.def("eigenfunction", &eigenfunction, py::arg("l"), py::arg("m_tilde"), py::arg("b"), py::arg("t"),
          py::arg("phi") = 0.0);
  mod.def("eigenfunction_text", [](int l, int m_tilde, const std::string& b) {
    return to_string(eckart_eigenfunction(l, m_tilde, parse_rational(b)).expression);
  }, py::arg("l"), py::arg("m_tilde"), py::arg("b"));

  mod.def("verify", &verify, py::arg("suite"), py::arg("l_max"), py::arg("couplings"), py::arg("tol"),
          py::arg("numeric"), py::arg("threads"));
  mod.def("mesh", &mesh, py::arg("kind"), py::arg("b"), py::arg("t_min"), py::arg("t_max"), py::arg("n_t"),
          py::arg("n_phi"));
}
