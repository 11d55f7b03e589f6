#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "eckart/exactring.hpp"

namespace eckart {

// The differential operators act on functions F(t) e^{i m phi}; the azimuthal
// derivative enters only through m (d^2/dphi^2 -> -m^2).

/// C = (1/s) d/dt s d/dt + (1/s^2) d^2/dphi^2 on the hyperboloid.
struct CasimirHyp {};
/// L^2 = -(1/s) d/dt s d/dt - (1/s^2) d^2/dphi^2 on the sphere.
struct L2Trig {};
/// C + 2b coth eta.
struct EckartHam {
  BPoly b;
};
/// L^2 - 2b cot theta.
struct RosenMorseHam {
  BPoly b;
};
/// l coth eta - d/deta.
struct Dl {
  int l = 0;
};
/// (2b/alpha - 1/2) coth eta - d/deta; equals Dl(l) at alpha = alpha_l.
struct Dgeneric {
  BPoly b;
  BPoly alpha;
};

using AngularOperator = std::variant<CasimirHyp, L2Trig, EckartHam, RosenMorseHam, Dl, Dgeneric>;

Signature signature_of(const AngularOperator& op);

/// second * F'' + first * F' + (zeroth + m^2 * azimuthal) * F, with every
/// coefficient a prefactor-free expression of the operator's geometry.
struct LinearOperator {
  Signature sig = Signature::Hyperbolic;
  SurfaceExpression second;
  SurfaceExpression first;
  SurfaceExpression zeroth;
  SurfaceExpression azimuthal;
};

LinearOperator lower(const AngularOperator& op);

/// e^{-alpha t/2} op e^{alpha t/2}. For the Casimir this is
/// C + alpha^2/4 + alpha (d/deta + coth(eta)/2).
LinearOperator conjugate_by_scaling(const AngularOperator& op, const BPoly& alpha);
LinearOperator conjugate_by_scaling(const LinearOperator& op, const BPoly& alpha);

SurfaceExpression apply_exact(const LinearOperator& op, const SurfaceExpression& f);
SurfaceExpression apply_exact(const AngularOperator& op, const SurfaceExpression& f);

/// op f - lambda f in canonical form.
SurfaceExpression exact_residual(const AngularOperator& op, const SurfaceExpression& f,
                                 const BPoly& lambda);
SurfaceExpression exact_residual(const LinearOperator& op, const SurfaceExpression& f,
                                 const BPoly& lambda);

/// Coefficient norm of the exact residual: 0 exactly when f is an
/// eigenfunction with eigenvalue lambda. Throws on a zero f.
double eigen_residual(const AngularOperator& op, const SurfaceExpression& f, const BPoly& lambda);

struct GridSpec {
  Signature geometry = Signature::Hyperbolic;
  double t_min = 0.2;
  double t_max = 6.0;
  int n = 4001;
  int fd_order = 8;

  double step() const { return (t_max - t_min) / (n - 1); }
  double point(int i) const { return t_min + step() * i; }
};

/// eta in [0.2, 6.0] or theta in [0.2, pi - 0.2]; 4001 points, 8th-order stencils.
GridSpec default_grid(Signature geometry);
void validate(const GridSpec& spec);

/// Samples of the radial factor F(t) (exponential prefactor included,
/// azimuthal phase carried separately).
struct GridFunction {
  GridSpec spec;
  int phase = 0;
  std::vector<std::complex<double>> values;
};

GridFunction sample(const SurfaceExpression& f, const GridSpec& spec,
                    std::optional<std::complex<double>> coupling = std::nullopt);

/// Central-difference application of the operator. The result lives on the
/// interior sub-grid obtained by dropping fd_order/2 points at each end.
GridFunction apply_numeric(const LinearOperator& op, const GridFunction& f,
                           std::optional<std::complex<double>> coupling = std::nullopt);
GridFunction apply_numeric(const AngularOperator& op, const GridFunction& f,
                           std::optional<std::complex<double>> coupling = std::nullopt);

/// Drops `margin` points at both ends.
GridFunction interior(const GridFunction& f, int margin);

/// max |op f - lambda f| / max |f| over the interior grid.
double eigen_residual(const AngularOperator& op, const GridFunction& f, std::complex<double> lambda,
                      std::optional<std::complex<double>> coupling = std::nullopt);

/// Central finite-difference weights for the given derivative on the offsets
/// -p..p, p = order/2 (Fornberg's algorithm).
std::vector<double> central_weights(int derivative, int order);

}  // namespace eckart
