#pragma once

#include "eckart/exactring.hpp"
#include "eckart/polynomial.hpp"

namespace eckart {

/// Degree l and order m of an associated Legendre function, 0 <= m <= l.
struct LegendreIndex {
  int l = 0;
  int m = 0;
};

void validate(const LegendreIndex& idx);

/// Legendre polynomial P_l(x) with exact coefficients (Bonnet recurrence).
RationalPoly legendre_polynomial(int l);

/// P_l^m(c) = s^m d^m P_l / dx^m evaluated at x = c, as an exact expression in
/// the ring of the given signature. No Condon-Shortley phase: this is
/// (x^2 - 1)^(m/2) P_l^(m) on the hyperboloid and (1 - x^2)^(m/2) P_l^(m) on
/// the sphere.
SurfaceExpression legendre_exact(Signature sig, const LegendreIndex& idx);

/// P_l^m(cosh eta).
SurfaceExpression legendre_hyp_exact(const LegendreIndex& idx);
/// P_l^m(cos theta).
SurfaceExpression legendre_trig_exact(const LegendreIndex& idx);

/// P_l^m(cosh eta) e^{i m phi}.
SurfaceExpression pseudo_spherical_harmonic(const LegendreIndex& idx);

/// Jacobi parameters (gamma, delta) of P_n^{gamma,delta}.
struct JacobiParams {
  Rational gamma;
  Rational delta;
};

/// Jacobi polynomial P_n^{a,b}(x) over an exact field. Uses the three-term
/// recurrence and falls back to the binomial sum only when a recurrence
/// denominator vanishes, so any parameters (negative, complex) are accepted.
template <class T>
Polynomial<T> jacobi_polynomial(int n, const T& a, const T& b);

extern template Polynomial<Rational> jacobi_polynomial(int, const Rational&, const Rational&);
extern template Polynomial<Gaussian> jacobi_polynomial(int, const Gaussian&, const Gaussian&);

/// Floating-point value of P_n^{gamma,delta}(x) by the same recurrence.
double jacobi_poly(int n, const JacobiParams& p, double x);
/// Exact value at a rational point.
Rational jacobi_poly(int n, const JacobiParams& p, const Rational& x);

/// Parameters (alpha, beta) of the Romanovski family R_n^{alpha,beta}; the
/// weight is (1 + x^2)^(beta - 1) exp(-alpha * arccot x).
struct RomanovskiParams {
  Rational alpha;
  Rational beta;
};

/// arccot with values in (0, pi).
double arccot(double x);

double romanovski_weight(const RomanovskiParams& p, double x);

/// R_n = w^{-1} d^n/dx^n [(1 + x^2)^n w], built exactly. Writing the k-th
/// derivative as w (1+x^2)^(n-k) q_k(x), the weight's logarithmic derivative
/// (alpha + 2 (beta - 1) x) / (1 + x^2) gives
///   q_{k+1} = (alpha + 2(beta-1)x) q_k + 2(n-k) x q_k + (1 + x^2) q_k'.
RationalPoly romanovski_poly(int n, const RomanovskiParams& p);

/// (1+x^2) R'' + (alpha + 2 beta x) R' - n (2 beta + n - 1) R for R = R_n.
RationalPoly romanovski_ode_residual(int n, const RomanovskiParams& p);

/// i^n P_n^{1-beta-i alpha/2, 1-beta+i alpha/2}(i x), the Jacobi image of
/// R_n exactly as commonly printed.
GaussianPoly romanovski_jacobi_image_as_printed(int n, const RomanovskiParams& p);

/// (-2)^n n! i^n P_n^{beta-1+i alpha/2, beta-1-i alpha/2}(i x), which equals
/// R_n identically under the Rodrigues normalization above.
GaussianPoly romanovski_jacobi_image(int n, const RomanovskiParams& p);

/// Whether R_n equals the printed Jacobi image as a polynomial identity.
/// False for n >= 1 in general; see romanovski_jacobi_check_normalized.
bool romanovski_jacobi_check(int n, const RomanovskiParams& p);

/// Whether R_n equals romanovski_jacobi_image exactly.
bool romanovski_jacobi_check_normalized(int n, const RomanovskiParams& p);

}  // namespace eckart
