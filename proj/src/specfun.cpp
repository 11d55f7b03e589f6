#include "eckart/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eckart {

void validate(const LegendreIndex& idx) {
  if (idx.l < 0 || idx.m < 0 || idx.m > idx.l) {
    throw std::invalid_argument("invalid Legendre index (l=" + std::to_string(idx.l) +
                                ", m=" + std::to_string(idx.m) + "): need 0 <= m <= l");
  }
}

RationalPoly legendre_polynomial(int l) {
  if (l < 0) throw std::invalid_argument("Legendre degree must be non-negative");
  RationalPoly prev(1);
  if (l == 0) return prev;
  RationalPoly cur = RationalPoly::x();
  for (int n = 1; n < l; ++n) {
    // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
    RationalPoly next = (RationalPoly::x() * cur).scaled(Rational(2 * n + 1)) - prev.scaled(Rational(n));
    next = next.scaled(Rational(1, n + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

SurfaceExpression legendre_exact(Signature sig, const LegendreIndex& idx) {
  validate(idx);
  RationalPoly q = legendre_polynomial(idx.l);
  for (int k = 0; k < idx.m; ++k) q = q.derivative();
  std::vector<Term> terms;
  for (int k = 0; k <= q.degree(); ++k) {
    if (q[k] == 0) continue;
    terms.push_back({{k, idx.m}, BPoly(Gaussian(q[k]))});
  }
  return SurfaceExpression::from_terms(sig, terms);
}

SurfaceExpression legendre_hyp_exact(const LegendreIndex& idx) {
  return legendre_exact(Signature::Hyperbolic, idx);
}

SurfaceExpression legendre_trig_exact(const LegendreIndex& idx) {
  return legendre_exact(Signature::Trigonometric, idx);
}

SurfaceExpression pseudo_spherical_harmonic(const LegendreIndex& idx) {
  return legendre_hyp_exact(idx).with_prefactor(BPoly{}, idx.m);
}

namespace {

template <class T>
bool is_zero_value(const T& v) {
  if constexpr (std::is_same_v<T, Gaussian>) return v.is_zero();
  else return v == 0;
}

// Generalized binomial coefficient C(z, j) for any z in the field.
template <class T>
T binomial(const T& z, int j) {
  T acc(1);
  for (int i = 0; i < j; ++i) {
    acc *= (z - T(i));
    acc /= T(i + 1);
  }
  return acc;
}

template <class T>
Polynomial<T> jacobi_binomial_sum(int n, const T& a, const T& b) {
  const Polynomial<T> xm = Polynomial<T>(std::vector<T>{T(-1), T(1)}).scaled(T(Rational(1, 2)));
  const Polynomial<T> xp = Polynomial<T>(std::vector<T>{T(1), T(1)}).scaled(T(Rational(1, 2)));
  Polynomial<T> acc;
  for (int k = 0; k <= n; ++k) {
    Polynomial<T> term(binomial(T(n) + a, n - k) * binomial(T(n) + b, k));
    for (int i = 0; i < k; ++i) term *= xm;
    for (int i = 0; i < n - k; ++i) term *= xp;
    acc += term;
  }
  return acc;
}

}  // namespace

template <class T>
Polynomial<T> jacobi_polynomial(int n, const T& a, const T& b) {
  if (n < 0) throw std::invalid_argument("Jacobi degree must be non-negative");
  Polynomial<T> p0(T(1));
  if (n == 0) return p0;
  const T two(2);
  Polynomial<T> p1(std::vector<T>{(a - b) / two, (a + b + two) / two});
  for (int k = 2; k <= n; ++k) {
    const T kk(k);
    const T s = two * kk + a + b;
    const T a1 = two * kk * (kk + a + b) * (s - two);
    if (is_zero_value(a1)) return jacobi_binomial_sum(n, a, b);
    const T a2 = (s - T(1)) * (a * a - b * b);
    const T a3 = (s - two) * (s - T(1)) * s;
    const T a4 = two * (kk + a - T(1)) * (kk + b - T(1)) * s;
    Polynomial<T> next = Polynomial<T>(std::vector<T>{a2, a3}) * p1 - p0.scaled(a4);
    next = next.scaled(T(1) / a1);
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

template Polynomial<Rational> jacobi_polynomial(int, const Rational&, const Rational&);
template Polynomial<Gaussian> jacobi_polynomial(int, const Gaussian&, const Gaussian&);

double jacobi_poly(int n, const JacobiParams& p, double x) {
  if (n < 0) throw std::invalid_argument("Jacobi degree must be non-negative");
  const double a = to_double(p.gamma);
  const double b = to_double(p.delta);
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 0.5 * ((a + b + 2.0) * x + (a - b));
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double a1 = 2.0 * k * (k + a + b) * (s - 2.0);
    if (a1 == 0.0) {
      // Pole of the recurrence: evaluate the exact polynomial instead.
      return to_double(jacobi_polynomial(n, p.gamma, p.delta)(Rational(x)));
    }
    const double next = ((s - 1.0) * (a * a - b * b) + (s - 2.0) * (s - 1.0) * s * x) * p1 -
                        2.0 * (k + a - 1.0) * (k + b - 1.0) * s * p0;
    p0 = p1;
    p1 = next / a1;
  }
  return p1;
}

Rational jacobi_poly(int n, const JacobiParams& p, const Rational& x) {
  return jacobi_polynomial(n, p.gamma, p.delta)(x);
}

double arccot(double x) { return std::numbers::pi / 2.0 - std::atan(x); }

double romanovski_weight(const RomanovskiParams& p, double x) {
  return std::pow(1.0 + x * x, to_double(p.beta) - 1.0) * std::exp(-to_double(p.alpha) * arccot(x));
}

RationalPoly romanovski_poly(int n, const RomanovskiParams& p) {
  if (n < 0) throw std::invalid_argument("Romanovski degree must be non-negative");
  const RationalPoly x = RationalPoly::x();
  const RationalPoly sigma(std::vector<Rational>{1, 0, 1});
  const RationalPoly log_weight_num(std::vector<Rational>{p.alpha, 2 * (p.beta - 1)});
  RationalPoly q(1);
  for (int k = 0; k < n; ++k) {
    q = log_weight_num * q + (x * q).scaled(Rational(2 * (n - k))) + sigma * q.derivative();
  }
  return q;
}

RationalPoly romanovski_ode_residual(int n, const RomanovskiParams& p) {
  const RationalPoly r = romanovski_poly(n, p);
  const RationalPoly sigma(std::vector<Rational>{1, 0, 1});
  const RationalPoly tau(std::vector<Rational>{p.alpha, 2 * p.beta});
  const Rational lambda = Rational(n) * (2 * p.beta + n - 1);
  return sigma * r.derivative().derivative() + tau * r.derivative() - r.scaled(lambda);
}

GaussianPoly romanovski_jacobi_image_as_printed(int n, const RomanovskiParams& p) {
  const Gaussian half_alpha_i(Rational(0), p.alpha / 2);
  const Gaussian a = Gaussian(1 - p.beta) - half_alpha_i;
  const Gaussian b = Gaussian(1 - p.beta) + half_alpha_i;
  return jacobi_polynomial(n, a, b).rescaled_argument(Gaussian::i()).scaled(Gaussian::i_pow(n));
}

GaussianPoly romanovski_jacobi_image(int n, const RomanovskiParams& p) {
  const Gaussian half_alpha_i(Rational(0), p.alpha / 2);
  const Gaussian a = Gaussian(p.beta - 1) + half_alpha_i;
  const Gaussian b = Gaussian(p.beta - 1) - half_alpha_i;
  Rational norm(1);
  for (int k = 1; k <= n; ++k) norm *= -2 * k;
  return jacobi_polynomial(n, a, b)
      .rescaled_argument(Gaussian::i())
      .scaled(Gaussian::i_pow(n) * Gaussian(norm));
}

bool romanovski_jacobi_check(int n, const RomanovskiParams& p) {
  return to_bpoly(romanovski_poly(n, p)) == romanovski_jacobi_image_as_printed(n, p);
}

bool romanovski_jacobi_check_normalized(int n, const RomanovskiParams& p) {
  return to_bpoly(romanovski_poly(n, p)) == romanovski_jacobi_image(n, p);
}

}  // namespace eckart
