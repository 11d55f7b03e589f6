#include "eckart/expansion.hpp"

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "eckart/spectra.hpp"

namespace eckart {

namespace {

constexpr const char* kPhaseLaw = "phase(r,c) = -(c-r)";

void validate_state(int l, int m_tilde) {
  if (l < 0 || std::abs(m_tilde) > l) {
    throw std::invalid_argument("invalid state (l=" + std::to_string(l) + ", mTilde=" +
                                std::to_string(m_tilde) + "): need |mTilde| <= l");
  }
}

Rational real_part_checked(const Gaussian& g, const char* what) {
  if (!g.is_real()) throw identity_failure(std::string(what) + " is not real: " + to_string(g));
  return g.re();
}

Rational constant_of(const BPoly& p, const char* what) {
  if (!p.is_constant()) throw identity_failure(std::string(what) + " depends on b: " + to_string(p));
  return real_part_checked(p[0], what);
}

// Radial part sum_m a_m P_l^m of the level-l state with |m~| = row.
SurfaceExpression legendre_superposition(Signature sig, int l, const std::vector<BPoly>& row,
                                         int first) {
  SurfaceExpression out(sig);
  for (int m = first; m <= l; ++m) {
    if (row[m].is_zero()) continue;
    out = out + legendre_exact(sig, {l, m}).scaled(row[m]);
  }
  return out;
}

SurfaceExpression polynomial_in_cot(Signature sig, int l, const auto& poly) {
  // s^l p(c/s) = sum_k p_k c^k s^(l-k)
  std::vector<Term> terms;
  for (int k = 0; k <= poly.degree(); ++k) {
    Gaussian v(poly[k]);
    if (v.is_zero()) continue;
    terms.push_back({{k, l - k}, BPoly(v)});
  }
  return SurfaceExpression::from_terms(sig, terms);
}

DecompositionCheck compare(const SurfaceExpression& closed_form, const SurfaceExpression& superposition,
                           int l, int m_tilde) {
  const Monomial lowest{(l - m_tilde) % 2, m_tilde};
  const BPoly x = superposition.coefficient(lowest);
  const BPoly j = closed_form.coefficient(lowest);
  if (!x.is_constant() || !j.is_constant() || x.is_zero()) {
    throw std::invalid_argument("decomposition check expects a fixed rational coupling");
  }
  const Gaussian scale = j.is_zero() ? Gaussian(0) : j[0] / x[0];
  return {scale, closed_form - superposition.scaled(BPoly(scale))};
}

}  // namespace

std::optional<std::vector<BPoly>> legendre_expansion(const SurfaceExpression& g, int l) {
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  if (!g.exp_factor().is_zero()) {
    throw std::invalid_argument("legendre_expansion expects no exponential prefactor");
  }
  const Signature sig = g.signature();
  std::vector<SurfaceExpression> basis;
  for (int k = 0; k <= l; ++k) basis.push_back(legendre_exact(sig, {l, k}));

  std::vector<BPoly> coeffs(static_cast<std::size_t>(l) + 1);
  SurfaceExpression rest = g.with_prefactor(BPoly{}, 0);
  while (!rest.is_zero()) {
    int lowest = rest.terms().begin()->first.s_power;
    for (const auto& [m, c] : rest.terms()) lowest = std::min(lowest, m.s_power);
    const Monomial head{(l - lowest) % 2 == 0 ? 0 : 1, lowest};
    if (lowest < 0 || lowest > l) return std::nullopt;
    if (rest.coefficient({1 - head.c_power, lowest}) != BPoly{}) return std::nullopt;
    const SurfaceExpression& p = basis[lowest];
    const Gaussian pivot = p.coefficient(head)[0];
    const BPoly x = rest.coefficient(head).scaled(pivot.inverse());
    coeffs[lowest] += x;
    rest = rest - p.scaled(x);
  }
  return coeffs;
}

Rational recurrence_constant(int l, int m) {
  if (l < 1 || m < 0 || m >= l) {
    throw std::invalid_argument("recurrence constant needs 1 <= l and 0 <= m < l");
  }
  const SurfaceExpression image = apply_exact(Dl{l}, legendre_hyp_exact({l, m}));
  const SurfaceExpression target = SurfaceExpression::monomial(Signature::Hyperbolic, 0, -2) *
                                   legendre_hyp_exact({l, m + 1});
  const auto& [mono, coeff] = *target.terms().begin();
  const BPoly ratio = image.coefficient(mono).scaled(coeff[0].inverse());
  if (!(image - target.scaled(ratio)).is_zero()) {
    throw identity_failure("D_" + std::to_string(l) + " P_" + std::to_string(l) + "^" +
                           std::to_string(m) + " is not a constant multiple of s^-2 P_" +
                           std::to_string(l) + "^" + std::to_string(m + 1));
  }
  return constant_of(ratio, "recurrence constant");
}

std::vector<Rational> raising_expansion(int l, int m) {
  if (l < 0 || m < 0 || m > l) throw std::invalid_argument("raising expansion needs 0 <= m <= l");
  const SurfaceExpression image = SurfaceExpression::monomial(Signature::Hyperbolic, 0, 2) *
                                  apply_exact(Dl{l}, legendre_hyp_exact({l, m}));
  const auto coeffs = legendre_expansion(image, l);
  if (!coeffs) {
    throw identity_failure("s^2 D_l P_l^m is outside the span of P_l^k for l=" + std::to_string(l) +
                           ", m=" + std::to_string(m));
  }
  std::vector<Rational> out;
  for (const auto& c : *coeffs) out.push_back(constant_of(c, "raising coefficient"));
  return out;
}

SymbolicCoeffMatrix coeff_matrix(int l) {
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  const BPoly alpha = alpha_l(l);
  std::vector<std::vector<Rational>> raise;
  for (int m = 0; m <= l; ++m) raise.push_back(raising_expansion(l, m));

  SymbolicCoeffMatrix out{l, std::vector<std::vector<BPoly>>(l + 1, std::vector<BPoly>(l + 1))};
  for (int r = 0; r <= l; ++r) {
    auto& a = out.entries[r];
    a[r] = BPoly(1);
    for (int k = r + 1; k <= l; ++k) {
      BPoly sum;
      for (int m = r; m < k; ++m) sum += a[m].scaled(Gaussian(raise[m][k]));
      a[k] = (alpha * sum).scaled(Gaussian(Rational(1) / (r * r - k * k)));
    }
  }
  return out;
}

CoeffMatrix coeff_matrix(int l, const Rational& b) {
  const SymbolicCoeffMatrix sym = coeff_matrix(l);
  CoeffMatrix out{l, b, std::vector<std::vector<Rational>>(l + 1, std::vector<Rational>(l + 1))};
  for (int r = 0; r <= l; ++r) {
    for (int c = 0; c <= l; ++c) {
      out.entries[r][c] = real_part_checked(evaluate_at(sym.entries[r][c], b), "matrix entry");
    }
  }
  return out;
}

std::string to_json(const CoeffMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m.entries) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  nlohmann::json doc = {{"l", m.l}, {"b", to_string(m.b)}, {"entries", rows}, {"phase_law", kPhaseLaw}};
  return doc.dump(2) + "\n";
}

CoeffMatrix coeff_matrix_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  CoeffMatrix out;
  out.l = doc.at("l").get<int>();
  out.b = parse_rational(doc.at("b").get<std::string>());
  const auto& rows = doc.at("entries");
  if (static_cast<int>(rows.size()) != out.l + 1) throw std::invalid_argument("wrong row count");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != out.l + 1) throw std::invalid_argument("wrong column count");
    std::vector<Rational> r;
    for (const auto& v : row) r.push_back(parse_rational(v.get<std::string>()));
    out.entries.push_back(std::move(r));
  }
  return out;
}

std::string to_text(const CoeffMatrix& m) {
  std::ostringstream os;
  for (const auto& row : m.entries) {
    os << '[';
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? ", " : "") << to_string(row[c]);
    os << "]\n";
  }
  return os.str();
}

std::string to_csv(const CoeffMatrix& m) {
  std::ostringstream os;
  os << "l,b,row,col,value\n";
  for (int r = 0; r <= m.l; ++r) {
    for (int c = 0; c <= m.l; ++c) {
      os << m.l << ',' << to_string(m.b) << ',' << r << ',' << c << ',' << to_string(m.entries[r][c])
         << '\n';
    }
  }
  return os.str();
}

EckartEigenfunction eckart_eigenfunction(int l, int m_tilde) {
  validate_state(l, m_tilde);
  const int row = std::abs(m_tilde);
  const SymbolicCoeffMatrix a = coeff_matrix(l);
  SurfaceExpression radial = legendre_superposition(Signature::Hyperbolic, l, a.entries[row], row);
  BPoly mu = alpha_l(l).scaled(Gaussian(Rational(-1, 2)));
  return {l, m_tilde, std::nullopt, radial.with_prefactor(std::move(mu), m_tilde)};
}

EckartEigenfunction eckart_eigenfunction(int l, int m_tilde, const Rational& b) {
  EckartEigenfunction out = eckart_eigenfunction(l, m_tilde);
  out.b = b;
  out.expression = out.expression.at_coupling(b);
  return out;
}

EckartEigenfunction eckart_eigenfunction(const CoeffMatrix& a, int m_tilde) {
  validate_state(a.l, m_tilde);
  if (static_cast<int>(a.entries.size()) != a.size()) throw std::invalid_argument("malformed coefficient matrix");
  const int row = std::abs(m_tilde);
  std::vector<BPoly> coeffs;
  for (const auto& v : a.entries[row]) coeffs.emplace_back(Gaussian(v));
  SurfaceExpression radial = legendre_superposition(Signature::Hyperbolic, a.l, coeffs, row);
  BPoly mu(Gaussian(-alpha_l(a.l, a.b) / 2));
  return {a.l, m_tilde, a.b, radial.with_prefactor(std::move(mu), m_tilde)};
}

std::vector<EckartEigenfunction> eckart_multiplet(int l, const Rational& b) {
  std::vector<EckartEigenfunction> out;
  for (int mt = -l; mt <= l; ++mt) out.push_back(eckart_eigenfunction(l, mt, b));
  return out;
}

RosenMorseEigenfunction rosen_morse_eigenfunction(int l, int m_tilde) {
  const EckartEigenfunction hyp = eckart_eigenfunction(l, m_tilde);
  const SurfaceExpression image = substitute_complexify(hyp.expression);
  auto coeffs = legendre_expansion(image.with_prefactor(BPoly{}, 0), l);
  if (!coeffs) throw identity_failure("complexified state left the spherical-harmonic span");
  const BPoly lead = (*coeffs)[std::abs(m_tilde)];
  if (!lead.is_constant() || lead.is_zero()) {
    throw identity_failure("leading coefficient of the complexified state is not a nonzero constant");
  }
  const BPoly norm(lead[0].inverse());
  for (auto& c : *coeffs) {
    c = c * norm;
    for (const auto& g : c.coefficients()) {
      if (!g.is_real()) throw identity_failure("complexified coefficient is not real: " + to_string(c));
    }
  }
  return {l, m_tilde, std::nullopt, std::move(*coeffs), image.scaled(norm)};
}

RosenMorseEigenfunction rosen_morse_eigenfunction(int l, int m_tilde, const Rational& b) {
  RosenMorseEigenfunction out = rosen_morse_eigenfunction(l, m_tilde);
  out.b = b;
  for (auto& c : out.coefficients) c = BPoly(evaluate_at(c, b));
  out.expression = out.expression.at_coupling(b);
  return out;
}

SurfaceExpression jacobi_solution(int l, int m_tilde, const Rational& b) {
  validate_state(l, m_tilde);
  const JacobiParams jp = jacobi_params(l, b);
  const int n = l - std::abs(m_tilde);
  return polynomial_in_cot(Signature::Hyperbolic, l, jacobi_polynomial(n, jp.gamma, jp.delta));
}

DecompositionCheck jacobi_decomposition_check(int l, int m_tilde, const Rational& b) {
  const int row = std::abs(m_tilde);
  const SurfaceExpression radial =
      eckart_eigenfunction(l, m_tilde, b).expression.with_prefactor(BPoly{}, 0);
  return compare(jacobi_solution(l, m_tilde, b), radial, l, row);
}

RomanovskiParams romanovski_solution_params(int l, const Rational& b, RomanovskiBeta convention) {
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  const Rational h(2 * l + 1, 2);
  const Rational beta = convention == RomanovskiBeta::AsPrinted ? Rational(-h) : Rational(1 - h);
  return {2 * b / h, beta};
}

SurfaceExpression romanovski_solution(int l, int m_tilde, const Rational& b,
                                      RomanovskiBeta convention) {
  validate_state(l, m_tilde);
  const int n = l - std::abs(m_tilde);
  return polynomial_in_cot(Signature::Trigonometric, l,
                           romanovski_poly(n, romanovski_solution_params(l, b, convention)));
}

DecompositionCheck romanovski_decomposition_check(int l, int m_tilde, const Rational& b,
                                                  RomanovskiBeta convention) {
  const SurfaceExpression radial =
      rosen_morse_eigenfunction(l, m_tilde, b).expression.with_prefactor(BPoly{}, 0);
  return compare(romanovski_solution(l, m_tilde, b, convention), radial, l, std::abs(m_tilde));
}

}  // namespace eckart
