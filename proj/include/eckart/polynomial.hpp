#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eckart/rational.hpp"

namespace eckart {

/// Dense univariate polynomial over an exact field (Rational or Gaussian).
/// Coefficients are stored lowest power first with trailing zeros trimmed,
/// so the zero polynomial has no coefficients and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(T constant) {  // NOLINT(google-explicit-constructor)
    coeffs_.push_back(std::move(constant));
    trim();
  }
  Polynomial(int constant) : Polynomial(T(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial x() { return monomial(T(1), 1); }
  static Polynomial monomial(T coeff, int power) {
    std::vector<T> c(static_cast<std::size_t>(power) + 1, T(0));
    c.back() = std::move(coeff);
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<T>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k; zero outside the stored range.
  T operator[](int k) const {
    if (k < 0 || k > degree()) return T(0);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return a.scaled(T(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial scaled(const T& factor) const {
    std::vector<T> c = coeffs_;
    for (auto& v : c) v *= factor;
    return Polynomial(std::move(c));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> c(coeffs_.size() - 1, T(0));
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * T(static_cast<int>(k));
    return Polynomial(std::move(c));
  }

  /// p(factor * x): multiplies the k-th coefficient by factor^k.
  Polynomial rescaled_argument(const T& factor) const {
    std::vector<T> c = coeffs_;
    T power(1);
    for (auto& v : c) {
      v *= power;
      power *= factor;
    }
    return Polynomial(std::move(c));
  }

  /// Exact evaluation by Horner's rule.
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::complex<double> evaluate(std::complex<double> x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_complex(*it);
    return acc;
  }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(f(v));
    return Polynomial<U>(std::move(c));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && is_zero_value(coeffs_.back())) coeffs_.pop_back();
  }
  static bool is_zero_value(const T& v) {
    if constexpr (requires { v.is_zero(); }) {
      return v.is_zero();
    } else {
      return v == 0;
    }
  }

  std::vector<T> coeffs_;
};

/// Quotient of an exact polynomial division, or nullopt when the divisor does
/// not divide the dividend.
template <class T>
std::optional<Polynomial<T>> divide_exact(const Polynomial<T>& num, const Polynomial<T>& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return Polynomial<T>{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<T> rem = num.coefficients();
  std::vector<T> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1, T(0));
  const T& lead = den.coefficients().back();
  for (int k = num.degree() - den.degree(); k >= 0; --k) {
    T q = rem[static_cast<std::size_t>(k + den.degree())] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= den.degree(); ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * den.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  if (!Polynomial<T>(std::move(rem)).is_zero()) return std::nullopt;
  return Polynomial<T>(std::move(quot));
}

/// Polynomial in the formal coupling b with Gaussian-rational coefficients.
using BPoly = Polynomial<Gaussian>;
using RationalPoly = Polynomial<Rational>;
using GaussianPoly = Polynomial<Gaussian>;

/// The coupling indeterminate b.
inline BPoly coupling() { return BPoly::x(); }

inline BPoly to_bpoly(const RationalPoly& p) {
  return p.map([](const Rational& r) { return Gaussian(r); });
}

/// Renders with the given variable name, e.g. "(-8/15*b + 1)". Single terms
/// are left unparenthesised.
std::string to_string(const BPoly& p, const std::string& var = "b");
std::string to_string(const RationalPoly& p, const std::string& var = "x");

/// Magnitude sum of all coefficients; zero iff the polynomial is zero.
double coefficient_norm(const BPoly& p);

/// Substitutes a rational value for the variable.
Gaussian evaluate_at(const BPoly& p, const Rational& value);

}  // namespace eckart
