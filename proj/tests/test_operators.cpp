#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eckart/operators.hpp"
#include "eckart/specfun.hpp"
#include "eckart/spectra.hpp"

using namespace eckart;

namespace {

constexpr auto kHyp = Signature::Hyperbolic;
constexpr auto kTrig = Signature::Trigonometric;

BPoly rat(long num, long den = 1) { return BPoly(Gaussian(Rational(num, den))); }

}  // namespace

TEST(Operators, CasimirOnPseudoSphericalHarmonics) {
  for (int l = 0; l <= 6; ++l) {
    for (int m = 0; m <= l; ++m) {
      const auto y = pseudo_spherical_harmonic({l, m});
      EXPECT_TRUE(exact_residual(CasimirHyp{}, y, BPoly(l * (l + 1))).is_zero()) << l << "," << m;
      EXPECT_FALSE(exact_residual(CasimirHyp{}, y, BPoly(l * (l + 1) + 1)).is_zero());
    }
  }
}

TEST(Operators, AngularMomentumOnSphericalHarmonics) {
  for (int l = 0; l <= 6; ++l) {
    for (int m = 0; m <= l; ++m) {
      const auto y = legendre_trig_exact({l, m}).with_prefactor(BPoly{}, -m);
      EXPECT_TRUE(exact_residual(L2Trig{}, y, BPoly(l * (l + 1))).is_zero()) << l << "," << m;
    }
  }
}

TEST(Operators, LoweringAnnihilatesTopOrder) {
  for (int l = 0; l <= 8; ++l) EXPECT_TRUE(apply_exact(Dl{l}, legendre_hyp_exact({l, l})).is_zero()) << l;
  EXPECT_FALSE(apply_exact(Dl{2}, legendre_hyp_exact({2, 1})).is_zero());
}

TEST(Operators, GenericLoweringReducesToDl) {
  for (int l = 0; l <= 5; ++l) {
    const LinearOperator a = lower(Dgeneric{coupling(), alpha_l(l)});
    const LinearOperator b = lower(Dl{l});
    EXPECT_EQ(a.first, b.first);
    EXPECT_EQ(a.zeroth, b.zeroth);
  }
  EXPECT_THROW(lower(Dgeneric{coupling(), coupling() * coupling()}), std::invalid_argument);
}

TEST(Operators, LoweredCoefficients) {
  const LinearOperator e = lower(EckartHam{coupling()});
  EXPECT_EQ(e.sig, kHyp);
  EXPECT_EQ(e.second, SurfaceExpression::constant(kHyp, BPoly(1)));
  EXPECT_EQ(e.first, SurfaceExpression::monomial(kHyp, 1, -1));
  EXPECT_EQ(e.zeroth, SurfaceExpression::monomial(kHyp, 1, -1, coupling().scaled(Gaussian(2))));
  EXPECT_EQ(e.azimuthal, SurfaceExpression::monomial(kHyp, 0, -2, BPoly(-1)));
  const LinearOperator r = lower(RosenMorseHam{coupling()});
  EXPECT_EQ(r.sig, kTrig);
  EXPECT_EQ(r.zeroth, SurfaceExpression::monomial(kTrig, 1, -1, coupling().scaled(Gaussian(-2))));
  EXPECT_EQ(signature_of(RosenMorseHam{}), kTrig);
  EXPECT_EQ(signature_of(Dl{1}), kHyp);
}

TEST(Operators, ScalingConjugationOfTheCasimir) {
  // e^{-alpha t/2} C e^{alpha t/2} = C + alpha^2/4 + alpha (d/dt + coth/2)
  const BPoly alpha = coupling().scaled(Gaussian(4));
  const LinearOperator c = conjugate_by_scaling(CasimirHyp{}, alpha);
  EXPECT_EQ(c.first, SurfaceExpression::monomial(kHyp, 1, -1) + SurfaceExpression::constant(kHyp, alpha));
  EXPECT_EQ(c.zeroth, SurfaceExpression::constant(kHyp, alpha * alpha.scaled(Gaussian(Rational(1, 4)))) +
                          SurfaceExpression::monomial(kHyp, 1, -1, alpha.scaled(Gaussian(Rational(1, 2)))));
  // Ground state: (C - 4b^2 + 2b coth) e^{-2b eta} = 0
  const SurfaceExpression ground =
      SurfaceExpression::constant(kHyp, BPoly(1)).with_prefactor(coupling().scaled(Gaussian(-2)), 0);
  EXPECT_TRUE(exact_residual(EckartHam{coupling()}, ground, coupling() * coupling().scaled(Gaussian(4))).is_zero());
}

TEST(Operators, RejectsGeometryMismatch) {
  EXPECT_THROW(apply_exact(CasimirHyp{}, legendre_trig_exact({1, 0})), ring_error);
  EXPECT_THROW(eigen_residual(CasimirHyp{}, SurfaceExpression(kHyp), BPoly(0)), std::invalid_argument);
}

TEST(FiniteDifference, CentralWeights) {
  const auto w2 = central_weights(2, 2);
  ASSERT_EQ(w2.size(), 3u);
  EXPECT_NEAR(w2[0], 1.0, 1e-15);
  EXPECT_NEAR(w2[1], -2.0, 1e-15);
  EXPECT_NEAR(w2[2], 1.0, 1e-15);
  const auto w1 = central_weights(1, 4);
  const std::vector<double> expect{1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
  for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR(w1[k], expect[k], 1e-15);
  // An order-8 stencil differentiates polynomials up to degree 8 exactly.
  for (int deriv : {1, 2}) {
    const auto w = central_weights(deriv, 8);
    for (int p = 0; p <= 8; ++p) {
      double acc = 0.0;
      for (int j = -4; j <= 4; ++j) acc += w[j + 4] * std::pow(j, p);
      const double expect_d = p == deriv ? (deriv == 1 ? 1.0 : 2.0) : 0.0;
      EXPECT_NEAR(acc, expect_d, 1e-9) << deriv << " " << p;
    }
  }
  EXPECT_THROW(central_weights(1, 3), std::invalid_argument);
}

TEST(FiniteDifference, GridValidation) {
  EXPECT_NO_THROW(validate(default_grid(kHyp)));
  EXPECT_NO_THROW(validate(default_grid(kTrig)));
  EXPECT_THROW(validate(GridSpec{kHyp, 0.0, 1.0, 101, 8}), std::invalid_argument);
  EXPECT_THROW(validate(GridSpec{kHyp, 1.0, 0.5, 101, 8}), std::invalid_argument);
  EXPECT_THROW(validate(GridSpec{kTrig, 0.2, 3.2, 101, 8}), std::invalid_argument);
  EXPECT_THROW(validate(GridSpec{kHyp, 0.2, 1.0, 5, 8}), std::invalid_argument);
  EXPECT_THROW(validate(GridSpec{kHyp, 0.2, 1.0, 101, 5}), std::invalid_argument);
  const GridSpec g = default_grid(kHyp);
  EXPECT_DOUBLE_EQ(g.point(0), 0.2);
  EXPECT_NEAR(g.point(g.n - 1), 6.0, 1e-12);
}

TEST(FiniteDifference, NumericCasimirMatchesExact) {
  const GridSpec grid{kHyp, 0.3, 3.0, 801, 8};
  const auto y = pseudo_spherical_harmonic({3, 1});
  const GridFunction f = sample(y, grid);
  const GridFunction image = apply_numeric(CasimirHyp{}, f);
  const SurfaceExpression exact = apply_exact(CasimirHyp{}, y);
  EXPECT_EQ(image.spec.n, grid.n - 8);
  double worst = 0.0, scale = 0.0;
  for (int i = 0; i < image.spec.n; ++i) {
    const auto e = evaluate(exact, image.spec.point(i));
    worst = std::max(worst, std::abs(image.values[i] - e));
    scale = std::max(scale, std::abs(e));
  }
  EXPECT_LT(worst / scale, 1e-9);
}

TEST(FiniteDifference, EigenResidualSeparatesTrueAndFalseEigenvalues) {
  const auto y = pseudo_spherical_harmonic({2, 1});
  const GridFunction f = sample(y, default_grid(kHyp));
  EXPECT_LT(eigen_residual(CasimirHyp{}, f, 6.0), 1e-8);
  EXPECT_GT(eigen_residual(CasimirHyp{}, f, 6.1), 1e-2);
  // Sphere: L^2 with lambda = l(l+1)
  const auto ys = legendre_trig_exact({3, 2}).with_prefactor(BPoly{}, 2);
  EXPECT_LT(eigen_residual(L2Trig{}, sample(ys, default_grid(kTrig)), 12.0), 1e-8);
}

TEST(FiniteDifference, CouplingDependentOperatorNeedsValue) {
  const auto y = pseudo_spherical_harmonic({0, 0});
  const GridFunction f = sample(y, GridSpec{kHyp, 0.5, 1.5, 51, 4});
  EXPECT_THROW(apply_numeric(EckartHam{coupling()}, f), std::invalid_argument);
  EXPECT_NO_THROW(apply_numeric(EckartHam{coupling()}, f, 1.0));
  EXPECT_NO_THROW(apply_numeric(EckartHam{rat(1, 2)}, f));
}
