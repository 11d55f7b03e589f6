#include "eckart/spectra.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace eckart {

namespace {

void require_level(int l) {
  if (l < 0) throw std::invalid_argument("l must be non-negative, got " + std::to_string(l));
}

Rational half_integer(int l) { return Rational(2 * l + 1, 2); }

}  // namespace

Rational alpha_l(int l, const Rational& b) {
  require_level(l);
  return 2 * b / half_integer(l);
}

BPoly alpha_l(int l) {
  require_level(l);
  return coupling().scaled(Gaussian(2 / half_integer(l)));
}

Rational eckart_energy(int l, const Rational& b) {
  require_level(l);
  const Rational h = half_integer(l);
  return -Rational(l * (l + 1)) - b * b / (h * h);
}

Rational rosen_morse_energy(int l, const Rational& b) {
  require_level(l);
  const Rational h = half_integer(l);
  return Rational(l * (l + 1)) - b * b / (h * h);
}

BPoly eckart_eigenvalue(int l) {
  const BPoly a = alpha_l(l);
  return BPoly(l * (l + 1)) + (a * a).scaled(Gaussian(Rational(1, 4)));
}

BPoly rosen_morse_eigenvalue(int l) {
  const BPoly a = alpha_l(l);
  return BPoly(l * (l + 1)) - (a * a).scaled(Gaussian(Rational(1, 4)));
}

JacobiParams jacobi_params(int l, const Rational& b) {
  require_level(l);
  const Rational h = half_integer(l);
  return {b / h - h, -b / h - h};
}

int quantum_numbers(int n, int m_tilde) {
  if (n < 0 || m_tilde < 0) throw std::invalid_argument("n and mTilde must be non-negative");
  return m_tilde + n;
}

int degeneracy(int l) {
  require_level(l);
  return 2 * l + 1;
}

std::vector<SpectrumEntry> spectrum_table(int l_max, const Rational& b) {
  if (l_max < 0) throw std::invalid_argument("lmax must be non-negative");
  std::vector<SpectrumEntry> out;
  out.reserve(static_cast<std::size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) {
    const auto jp = jacobi_params(l, b);
    out.push_back({l, b, alpha_l(l, b), eckart_energy(l, b), rosen_morse_energy(l, b), jp.gamma,
                   jp.delta, degeneracy(l)});
  }
  return out;
}

std::string spectrum_to_csv(const std::vector<SpectrumEntry>& table) {
  std::ostringstream os;
  os << "l,b,alpha_l,epsilon,epsilon_rm,gamma,delta,degeneracy\n";
  for (const auto& e : table) {
    os << e.l << ',' << to_string(e.b) << ',' << to_string(e.alpha_l) << ',' << to_string(e.epsilon)
       << ',' << to_string(e.epsilon_rm) << ',' << to_string(e.gamma_l) << ','
       << to_string(e.delta_l) << ',' << e.degeneracy << '\n';
  }
  return os.str();
}

std::string spectrum_to_json(const std::vector<SpectrumEntry>& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : table) {
    rows.push_back({{"l", e.l},
                    {"b", to_string(e.b)},
                    {"alpha_l", to_string(e.alpha_l)},
                    {"epsilon", to_string(e.epsilon)},
                    {"epsilon_rm", to_string(e.epsilon_rm)},
                    {"gamma", to_string(e.gamma_l)},
                    {"delta", to_string(e.delta_l)},
                    {"degeneracy", e.degeneracy}});
  }
  nlohmann::json doc = {
      {"units", "hbar=1, 2M=1"},
      {"sign_convention", "(C + 2b coth eta) X = -epsilon X; (L^2 - 2b cot theta) X = epsilon_rm X"},
      {"entries", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace eckart
