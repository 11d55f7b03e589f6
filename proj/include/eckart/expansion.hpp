#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eckart/exactring.hpp"
#include "eckart/operators.hpp"
#include "eckart/specfun.hpp"

namespace eckart {

/// Raised when an identity that a construction depends on does not hold.
class identity_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients x_0..x_l with sum_k x_k P_l^k = g, or nullopt if g is not in
/// the span. g must carry no exponential prefactor; its phase is ignored.
/// Works by peeling off the lowest power of s, which in P_l^k is the single
/// monomial c^((l-k) mod 2) s^k.
std::optional<std::vector<BPoly>> legendre_expansion(const SurfaceExpression& g, int l);

/// The rational c with D_l P_l^m = c s^-2 P_l^{m+1}. Requires 1 <= l and
/// 0 <= m < l. Throws identity_failure when the quotient is not a constant,
/// which happens for every m <= l - 3.
Rational recurrence_constant(int l, int m);

/// Expansion of s^2 D_l P_l^m over P_l^k: entry k is the weight of P_l^k
/// (zero for k <= m). Always exists; a single nonzero entry c_{l,m} at
/// k = m + 1 when m >= l - 2.
std::vector<Rational> raising_expansion(int l, int m);

/// Upper-triangular (l+1)x(l+1) matrix of a^l entries with polynomial
/// dependence on the formal coupling b. Row r is m~ = r, column c is m = c,
/// and the implicit azimuthal factor of entry (r, c) is e^{-i(c - r) phi}.
struct SymbolicCoeffMatrix {
  int l = 0;
  std::vector<std::vector<BPoly>> entries;
};

/// The same matrix at a rational coupling value.
struct CoeffMatrix {
  int l = 0;
  Rational b;
  std::vector<std::vector<Rational>> entries;

  int size() const { return l + 1; }
  const Rational& operator()(int r, int c) const { return entries[r][c]; }
};

/// Solves the diagonal-normalized condition
///   [-m~^2/s^2 + alpha_l D_l] sum_m a_m P_l^m = -sum_m a_m (m^2/s^2) P_l^m
/// row by row: with s^2 D_l P_l^m = sum_k T_{mk} P_l^k,
///   a_k (m~^2 - k^2) = alpha_l sum_{m~ <= m < k} a_m T_{mk},  a_{m~} = 1.
SymbolicCoeffMatrix coeff_matrix(int l);
CoeffMatrix coeff_matrix(int l, const Rational& b);

/// JSON with exact-rational entry strings and the phase law.
std::string to_json(const CoeffMatrix& m);
CoeffMatrix coeff_matrix_from_json(const std::string& text);
/// Plain text, one row per line: "[1, -8/15, 8/75]".
std::string to_text(const CoeffMatrix& m);
std::string to_csv(const CoeffMatrix& m);

/// e^{-alpha_l t/2} sum_m a_m P_l^m e^{i m~ phi}; b is symbolic when absent.
/// Negative m~ gives the phase-conjugate partner with the same radial part.
struct EckartEigenfunction {
  int l = 0;
  int m_tilde = 0;
  std::optional<Rational> b;
  SurfaceExpression expression;
};

EckartEigenfunction eckart_eigenfunction(int l, int m_tilde);
EckartEigenfunction eckart_eigenfunction(int l, int m_tilde, const Rational& b);
/// Built from an explicit coefficient matrix (row |m~|) instead of the solved one.
EckartEigenfunction eckart_eigenfunction(const CoeffMatrix& a, int m_tilde);

/// All 2l+1 states of level l (m~ = -l..l).
std::vector<EckartEigenfunction> eckart_multiplet(int l, const Rational& b);

/// Image of the Eckart state on the sphere, normalized so the P_l^{m~}
/// coefficient is 1. `coefficients` holds the (real) weights of P_l^m(cos).
struct RosenMorseEigenfunction {
  int l = 0;
  int m_tilde = 0;
  std::optional<Rational> b;
  std::vector<BPoly> coefficients;
  SurfaceExpression expression;
};

RosenMorseEigenfunction rosen_morse_eigenfunction(int l, int m_tilde);
RosenMorseEigenfunction rosen_morse_eigenfunction(int l, int m_tilde, const Rational& b);

/// Outcome of comparing a closed-form polynomial solution J with the
/// Legendre superposition X: scale is J's coefficient over X's on the
/// P_l^{m~} term, residual is J - scale * X.
struct DecompositionCheck {
  Gaussian scale;
  SurfaceExpression residual;
  bool holds() const { return residual.is_zero(); }
};

/// s^l P_n^{gamma_l, delta_l}(coth eta) as an exact hyperbolic expression, n = l - m~.
SurfaceExpression jacobi_solution(int l, int m_tilde, const Rational& b);

DecompositionCheck jacobi_decomposition_check(int l, int m_tilde, const Rational& b);

/// Which beta the sphere-side Romanovski solution uses. AsPrinted is
/// -(l + 1/2); WeightConsistent is 1/2 - l, the value for which
/// sin^l R_n(cot) solves the Rosen-Morse problem when R_n is built from the
/// weight (1 + x^2)^(beta - 1) e^{-alpha arccot x}.
enum class RomanovskiBeta { AsPrinted, WeightConsistent };

RomanovskiParams romanovski_solution_params(int l, const Rational& b, RomanovskiBeta convention);

/// sin^l R_n^{2b/(l+1/2), beta}(cot theta) as an exact trigonometric expression.
SurfaceExpression romanovski_solution(int l, int m_tilde, const Rational& b,
                                      RomanovskiBeta convention);

DecompositionCheck romanovski_decomposition_check(int l, int m_tilde, const Rational& b,
                                                  RomanovskiBeta convention);

}  // namespace eckart
