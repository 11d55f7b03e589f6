#include "eckart/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace eckart {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

SurfaceExpression coth_like(Signature sig, BPoly coeff) {
  return SurfaceExpression::monomial(sig, 1, -1, std::move(coeff));
}

SurfaceExpression constant(Signature sig, BPoly value) {
  return SurfaceExpression::constant(sig, std::move(value));
}

LinearOperator casimir(Signature sig) {
  // C on the hyperboloid and L^2 on the sphere share the shape
  // sign * (F'' + (c/s) F' - m^2/s^2 F).
  const int sign = sig == Signature::Hyperbolic ? 1 : -1;
  return {sig, constant(sig, BPoly(sign)), coth_like(sig, BPoly(sign)), SurfaceExpression(sig),
          SurfaceExpression::monomial(sig, 0, -2, BPoly(-sign))};
}

}  // namespace

Signature signature_of(const AngularOperator& op) {
  return std::visit(overloaded{
                        [](const L2Trig&) { return Signature::Trigonometric; },
                        [](const RosenMorseHam&) { return Signature::Trigonometric; },
                        [](const auto&) { return Signature::Hyperbolic; },
                    },
                    op);
}

LinearOperator lower(const AngularOperator& op) {
  constexpr auto hyp = Signature::Hyperbolic;
  constexpr auto trig = Signature::Trigonometric;
  return std::visit(
      overloaded{
          [](const CasimirHyp&) { return casimir(hyp); },
          [](const L2Trig&) { return casimir(trig); },
          [](const EckartHam& e) {
            LinearOperator out = casimir(hyp);
            out.zeroth = coth_like(hyp, e.b.scaled(Gaussian(2)));
            return out;
          },
          [](const RosenMorseHam& r) {
            LinearOperator out = casimir(trig);
            out.zeroth = coth_like(trig, r.b.scaled(Gaussian(-2)));
            return out;
          },
          [](const Dl& d) {
            return LinearOperator{hyp, SurfaceExpression(hyp), constant(hyp, BPoly(-1)),
                                  coth_like(hyp, BPoly(d.l)), SurfaceExpression(hyp)};
          },
          [](const Dgeneric& d) {
            auto ratio = divide_exact(d.b.scaled(Gaussian(2)), d.alpha);
            if (!ratio) {
              throw std::invalid_argument("2b/alpha is not a polynomial in b for alpha = " +
                                          to_string(d.alpha));
            }
            BPoly coeff = *ratio - BPoly(Gaussian(Rational(1, 2)));
            return LinearOperator{hyp, SurfaceExpression(hyp), constant(hyp, BPoly(-1)),
                                  coth_like(hyp, std::move(coeff)), SurfaceExpression(hyp)};
          },
      },
      op);
}

LinearOperator conjugate_by_scaling(const LinearOperator& op, const BPoly& alpha) {
  // e^{-mu t} L e^{mu t} g = p2 (g'' + 2 mu g' + mu^2 g) + p1 (g' + mu g) + p0 g, mu = alpha/2
  const BPoly mu = alpha.scaled(Gaussian(Rational(1, 2)));
  LinearOperator out = op;
  out.first = op.first + op.second.scaled(alpha);
  out.zeroth = op.zeroth + op.second.scaled(mu * mu) + op.first.scaled(mu);
  return out;
}

LinearOperator conjugate_by_scaling(const AngularOperator& op, const BPoly& alpha) {
  return conjugate_by_scaling(lower(op), alpha);
}

SurfaceExpression apply_exact(const LinearOperator& op, const SurfaceExpression& f) {
  if (f.signature() != op.sig) {
    throw ring_error(std::string("operator acts on ") + to_string(op.sig) +
                     " expressions, got a " + to_string(f.signature()) + " one");
  }
  if (f.is_zero()) return f;
  const SurfaceExpression d1 = differentiate(f);
  const SurfaceExpression d2 = differentiate(d1);
  const int m = f.phase();
  SurfaceExpression out = op.second * d2;
  out = out + op.first * d1;
  out = out + op.zeroth * f;
  out = out + op.azimuthal.scaled(BPoly(m * m)) * f;
  return out;
}

SurfaceExpression apply_exact(const AngularOperator& op, const SurfaceExpression& f) {
  return apply_exact(lower(op), f);
}

SurfaceExpression exact_residual(const LinearOperator& op, const SurfaceExpression& f,
                                 const BPoly& lambda) {
  return apply_exact(op, f) - f.scaled(lambda);
}

SurfaceExpression exact_residual(const AngularOperator& op, const SurfaceExpression& f,
                                 const BPoly& lambda) {
  return exact_residual(lower(op), f, lambda);
}

double eigen_residual(const AngularOperator& op, const SurfaceExpression& f, const BPoly& lambda) {
  if (f.is_zero()) throw std::invalid_argument("eigen residual of the zero function is undefined");
  return coefficient_norm(exact_residual(op, f, lambda));
}

GridSpec default_grid(Signature geometry) {
  if (geometry == Signature::Hyperbolic) return {geometry, 0.2, 6.0, 4001, 8};
  return {geometry, 0.2, std::numbers::pi - 0.2, 4001, 8};
}

void validate(const GridSpec& spec) {
  if (spec.n < 3) throw std::invalid_argument("grid needs at least 3 points");
  if (spec.fd_order < 2 || spec.fd_order % 2 != 0) {
    throw std::invalid_argument("finite-difference order must be a positive even integer");
  }
  if (spec.fd_order > spec.n - 1) {
    throw std::invalid_argument("grid of " + std::to_string(spec.n) + " points is too small for a " +
                                std::to_string(spec.fd_order) + "th-order stencil");
  }
  if (!(spec.t_min > 0.0) || !(spec.t_max > spec.t_min)) {
    throw std::invalid_argument("grid range must satisfy 0 < tMin < tMax");
  }
  if (spec.geometry == Signature::Trigonometric && !(spec.t_max < std::numbers::pi)) {
    throw std::invalid_argument("trigonometric grid must stay inside (0, pi)");
  }
}

GridFunction sample(const SurfaceExpression& f, const GridSpec& spec,
                    std::optional<std::complex<double>> coupling) {
  validate(spec);
  if (f.signature() != spec.geometry) throw ring_error("grid geometry does not match expression");
  GridFunction out{spec, f.phase(), {}};
  out.values.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    auto v = evaluate(f, spec.point(i), 0.0, coupling);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::domain_error("non-finite sample at t = " + std::to_string(spec.point(i)));
    }
    out.values.push_back(v);
  }
  return out;
}

std::vector<double> central_weights(int derivative, int order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("stencil order must be even");
  if (derivative < 0 || derivative > 2) throw std::invalid_argument("only derivatives 0..2");
  const int p = order / 2;
  const int npts = 2 * p + 1;
  std::vector<double> x(static_cast<std::size_t>(npts));
  for (int i = 0; i < npts; ++i) x[i] = i - p;
  // c[j][k]: weight of node j for the k-th derivative at 0
  std::vector<std::vector<double>> c(npts, std::vector<double>(derivative + 1, 0.0));
  double c1 = 1.0;
  double c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < npts; ++i) {
    const int mn = std::min(i, derivative);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(npts));
  for (int j = 0; j < npts; ++j) w[j] = c[j][derivative];
  return w;
}

GridFunction interior(const GridFunction& f, int margin) {
  if (2 * margin >= f.spec.n) throw std::invalid_argument("margin leaves no interior points");
  GridFunction out = f;
  const double h = f.spec.step();
  out.spec.t_min = f.spec.t_min + margin * h;
  out.spec.t_max = f.spec.t_max - margin * h;
  out.spec.n = f.spec.n - 2 * margin;
  out.values.assign(f.values.begin() + margin, f.values.end() - margin);
  return out;
}

GridFunction apply_numeric(const LinearOperator& op, const GridFunction& f,
                           std::optional<std::complex<double>> coupling) {
  validate(f.spec);
  if (op.sig != f.spec.geometry) throw ring_error("operator geometry does not match grid");
  if (static_cast<int>(f.values.size()) != f.spec.n) {
    throw std::invalid_argument("grid function has the wrong number of samples");
  }
  const int p = f.spec.fd_order / 2;
  const double h = f.spec.step();
  const auto w1 = central_weights(1, f.spec.fd_order);
  const auto w2 = central_weights(2, f.spec.fd_order);
  const double m2 = static_cast<double>(f.phase) * f.phase;

  GridFunction out = interior(f, p);
  for (int i = p; i < f.spec.n - p; ++i) {
    std::complex<double> d1{}, d2{};
    for (int j = -p; j <= p; ++j) {
      d1 += w1[j + p] * f.values[i + j];
      d2 += w2[j + p] * f.values[i + j];
    }
    d1 /= h;
    d2 /= h * h;
    const double t = f.spec.point(i);
    const auto a2 = evaluate(op.second, t, 0.0, coupling);
    const auto a1 = evaluate(op.first, t, 0.0, coupling);
    const auto a0 = evaluate(op.zeroth, t, 0.0, coupling) + m2 * evaluate(op.azimuthal, t, 0.0, coupling);
    out.values[i - p] = a2 * d2 + a1 * d1 + a0 * f.values[i];
  }
  return out;
}

GridFunction apply_numeric(const AngularOperator& op, const GridFunction& f,
                           std::optional<std::complex<double>> coupling) {
  return apply_numeric(lower(op), f, coupling);
}

double eigen_residual(const AngularOperator& op, const GridFunction& f, std::complex<double> lambda,
                      std::optional<std::complex<double>> coupling) {
  const GridFunction image = apply_numeric(op, f, coupling);
  const GridFunction base = interior(f, f.spec.fd_order / 2);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < base.values.size(); ++i) {
    num = std::max(num, std::abs(image.values[i] - lambda * base.values[i]));
    den = std::max(den, std::abs(base.values[i]));
  }
  if (den == 0.0) throw std::invalid_argument("eigen residual of the zero function is undefined");
  return num / den;
}

}  // namespace eckart
