#include "eckart/polynomial.hpp"

namespace eckart {

namespace {

template <class T>
std::string render(const Polynomial<T>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  int terms = 0;
  for (int k = p.degree(); k >= 0; --k) {
    const T c = p[k];
    if constexpr (std::is_same_v<T, Gaussian>) {
      if (c.is_zero()) continue;
    } else {
      if (c == 0) continue;
    }
    std::string piece = to_string(c);
    if (k >= 1) piece += "*" + var;
    if (k >= 2) piece += "^" + std::to_string(k);
    if (terms > 0) out += piece.front() == '-' ? " - " + piece.substr(1) : " + " + piece;
    else out = piece;
    ++terms;
  }
  return terms > 1 ? "(" + out + ")" : out;
}

}  // namespace

std::string to_string(const BPoly& p, const std::string& var) { return render(p, var); }
std::string to_string(const RationalPoly& p, const std::string& var) { return render(p, var); }

double coefficient_norm(const BPoly& p) {
  double acc = 0.0;
  for (const auto& c : p.coefficients()) acc += magnitude(c);
  return acc;
}

Gaussian evaluate_at(const BPoly& p, const Rational& value) { return p(Gaussian(value)); }

}  // namespace eckart
