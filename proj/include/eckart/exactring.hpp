#pragma once

#include <complex>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eckart/polynomial.hpp"

namespace eckart {

/// Which angular geometry an expression lives on. The value is the ring's
/// kappa: hyperbolic expressions obey c^2 - s^2 = 1 (c = cosh, s = sinh),
/// trigonometric ones c^2 + s^2 = 1 (c = cos, s = sin).
enum class Signature : int { Hyperbolic = -1, Trigonometric = 1 };

constexpr int kappa(Signature sig) { return static_cast<int>(sig); }
const char* to_string(Signature sig);

class ring_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// c^c_power * s^s_power. Canonical monomials have c_power in {0, 1}; the sine
/// power may be negative (coth, 1/sinh^2 and friends).
struct Monomial {
  int c_power = 0;
  int s_power = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Unreduced term used to build expressions from arbitrary c powers.
struct Term {
  Monomial monomial;
  BPoly coeff;
};

/// Exact function of one angle t and the azimuth phi:
///
///   exp(mu * t) * exp(i * m * phi) * sum_k coeff_k * c^p_k * s^q_k
///
/// with coefficients in Q(i)[b]. Values are immutable once built; every
/// operation returns a new canonical expression. The zero expression carries
/// no prefactor (mu = 0, m = 0).
class SurfaceExpression {
 public:
  explicit SurfaceExpression(Signature sig = Signature::Hyperbolic) : sig_(sig) {}

  static SurfaceExpression constant(Signature sig, BPoly value);
  static SurfaceExpression monomial(Signature sig, int c_power, int s_power, BPoly coeff = BPoly(1));
  /// Builds from arbitrary (possibly non-canonical) terms and reduces them.
  static SurfaceExpression from_terms(Signature sig, const std::vector<Term>& terms);

  /// Same terms with the exponential rate mu and azimuthal phase m replaced.
  SurfaceExpression with_prefactor(BPoly exp_factor, int phase) const;

  Signature signature() const { return sig_; }
  const BPoly& exp_factor() const { return exp_factor_; }
  int phase() const { return phase_; }
  const std::map<Monomial, BPoly>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a canonical monomial (zero if absent).
  BPoly coefficient(const Monomial& m) const;

  /// Multiplies every coefficient by a constant of the coefficient ring.
  SurfaceExpression scaled(const BPoly& factor) const;

  /// Substitutes a rational value for b in coefficients and the exponent.
  SurfaceExpression at_coupling(const Rational& b) const;

  /// True if no coefficient and no exponent depends on b.
  bool is_coupling_free() const;

  friend bool operator==(const SurfaceExpression& a, const SurfaceExpression& b);

 private:
  void accumulate(int c_power, int s_power, const BPoly& coeff);
  void normalize_zero();

  Signature sig_;
  std::map<Monomial, BPoly> terms_;
  BPoly exp_factor_;
  int phase_ = 0;
};

SurfaceExpression ring_add(const SurfaceExpression& a, const SurfaceExpression& b);
SurfaceExpression ring_sub(const SurfaceExpression& a, const SurfaceExpression& b);
SurfaceExpression ring_mul(const SurfaceExpression& a, const SurfaceExpression& b);

inline SurfaceExpression operator+(const SurfaceExpression& a, const SurfaceExpression& b) {
  return ring_add(a, b);
}
inline SurfaceExpression operator-(const SurfaceExpression& a, const SurfaceExpression& b) {
  return ring_sub(a, b);
}
inline SurfaceExpression operator*(const SurfaceExpression& a, const SurfaceExpression& b) {
  return ring_mul(a, b);
}

/// d/dt at fixed phi.
SurfaceExpression differentiate(const SurfaceExpression& f);

/// eta -> i*theta, b -> -i*b. Maps a hyperbolic expression to its
/// trigonometric image: c -> c, s -> i*s, b^k -> (-i)^k b^k, mu(b) -> i*mu(-i*b).
SurfaceExpression substitute_complexify(const SurfaceExpression& f);

/// Numerical value at angle t (complex allowed) and azimuth phi. `coupling`
/// must be supplied when the expression depends on b.
std::complex<double> evaluate(const SurfaceExpression& f, std::complex<double> t, double phi = 0.0,
                              std::optional<std::complex<double>> coupling = std::nullopt);

/// Sum of coefficient magnitudes; zero iff the expression is zero.
double coefficient_norm(const SurfaceExpression& f);

/// Canonical text: "coeff * c^p * s^q * exp(mu*t) * phase(m)" terms joined by " + ".
std::string to_string(const SurfaceExpression& f);

}  // namespace eckart
