#include <gtest/gtest.h>

#include <random>

#include "graze/airy.hpp"
#include "graze/quadrature.hpp"

using namespace graze;

namespace {

IntegrandSpec gaussian_spec(double k) {
  IntegrandSpec s;
  s.evaluator = [k](double u) { return std::exp(cplx(-u * u, k * u)); };
  s.damping = {1.0, 2.0, 0.0, 1.0};
  s.oscillation_scale = k;
  return s;
}

double tail_bound(double a, double p, double R) { return 2.0 * std::exp(-a * std::pow(R, p)) / (p * a * std::pow(R, p - 1)); }

}  // namespace

TEST(Integrate1d, Gaussian) {
  const QuadratureResult r = integrate_1d(gaussian_spec(0.0), 1e-13);
  EXPECT_NEAR(r.value.real(), std::sqrt(pi), 1e-12);
  EXPECT_NEAR(r.value.imag(), 0.0, 1e-14);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_GT(r.truncation_radius, 5.0);
  EXPECT_TRUE(r.converged);
}

TEST(Integrate1d, GaussianFourierAbsolute) {
  // the exact value is sqrt(pi) e^{-100}, far below double resolution of the
  // integrand's O(1) oscillations; on the real line only absolute accuracy is
  // available
  const QuadratureResult r = integrate_1d(gaussian_spec(20.0), 1e-10);
  EXPECT_LE(std::abs(r.value - std::sqrt(pi) * std::exp(-100.0)), 1e-10);
}

TEST(Integrate1d, GaussianFourierRelativeViaShift) {
  const double k = 20;
  RayIntegrandSpec s;
  s.evaluator = [k](cplx u) { return std::exp(-u * u + I * k * u); };
  s.damping = {1.0, 2.0, 0.0, std::exp(k * k / 4.0)};
  const QuadratureResult r = shifted_line_integral(s, k / 2.0, 1e-12);
  const double exact = std::sqrt(pi) * std::exp(-k * k / 4.0);
  EXPECT_LE(std::abs(r.value - exact) / exact, 1e-10);
}

TEST(Integrate1d, QuarticMoment) {
  IntegrandSpec s;
  s.evaluator = [](double u) { return u > 0 ? u * std::exp(-u * u * u * u) : 0.0; };
  s.damping = {1.0, 4.0, 0.0, 1.0};
  EXPECT_NEAR(integrate_1d(s, 1e-13).value.real(), std::sqrt(pi) / 4.0, 1e-12);
}

TEST(Integrate1d, PanelBudgetExhaustion) {
  IntegrandSpec s = gaussian_spec(200.0);
  try {
    integrate_1d(s, 1e-14, Exec::serial, 16);
    FAIL() << "expected NonConvergenceError";
  } catch (const NonConvergenceError& e) {
    EXPECT_FALSE(e.best.converged);
    EXPECT_TRUE(std::isfinite(e.best.value.real()));
  }
}

TEST(Integrate1d, RejectsMissingDamping) {
  IntegrandSpec s = gaussian_spec(0.0);
  s.damping.coefficient = 0;
  EXPECT_THROW(integrate_1d(s, 1e-8), DomainError);
  EXPECT_THROW(integrate_1d(gaussian_spec(0.0), 0.0), DomainError);
}

TEST(IntegrateNd, ProductGaussian) {
  NdIntegrandSpec s;
  s.evaluator = [](std::span<const double> v) { return cplx(std::exp(-v[0] * v[0] - v[1] * v[1])); };
  s.damping = {{1.0, 2.0, 0.0, 1.0}, {1.0, 2.0, 0.0, 1.0}};
  EXPECT_NEAR(integrate_nd(s, 2, 1e-11).value.real(), pi, 1e-10);
}

TEST(IntegrateNd, DampedFresnel) {
  NdIntegrandSpec s;
  s.evaluator = [](std::span<const double> v) {
    const double r2 = v[0] * v[0] + v[1] * v[1];
    return std::exp(cplx(-r2 / 10.0, r2));
  };
  s.damping = {{0.1, 2.0, 0.0, 1.0}, {0.1, 2.0, 0.0, 1.0}};
  s.oscillation_scale = 20.0;
  const cplx exact = pi / cplx(0.1, -1.0);
  EXPECT_LE(std::abs(integrate_nd(s, 2, 1e-10).value - exact), 1e-8);
}

TEST(IntegrateNd, ThreeDimensionalGaussian) {
  NdIntegrandSpec s;
  s.evaluator = [](std::span<const double> v) {
    return cplx(std::exp(-v[0] * v[0] - 2 * v[1] * v[1] - 3 * v[2] * v[2]));
  };
  s.damping = {{1.0, 2.0, 0.0, 1.0}, {2.0, 2.0, 0.0, 1.0}, {3.0, 2.0, 0.0, 1.0}};
  const double exact = std::pow(pi, 1.5) / std::sqrt(6.0);
  EXPECT_NEAR(integrate_nd(s, 3, 1e-8).value.real(), exact, 1e-7);
}

TEST(IntegrateNd, DimensionChecks) {
  NdIntegrandSpec s;
  s.evaluator = [](std::span<const double>) { return cplx(1.0); };
  s.damping = {{1.0, 2.0, 0.0, 1.0}};
  EXPECT_THROW(integrate_nd(s, 4, 1e-8), DomainError);
  EXPECT_THROW(integrate_nd(s, 2, 1e-8), DomainError);
}

TEST(TruncationRadius, Examples) {
  const double r1 = truncation_radius(1.0, 2.0, 1e-16);
  EXPECT_GT(r1, 5.8);
  EXPECT_LT(r1, 6.2);
  const double r2 = truncation_radius(1.0 / 32.0, 4.0, 1e-12);
  EXPECT_LE(tail_bound(1.0 / 32.0, 4.0, r2), 1e-12 * (1 + 1e-9));
  // below the crude (32 ln(1/tol))^{1/4}, which ignores the 1/(p a R^{p-1}) factor
  EXPECT_LT(r2, std::pow(32.0 * std::log(1e12), 0.25));
  EXPECT_GT(r2, 5.0);
  EXPECT_LT(truncation_radius(2.0, 2.0, 1e-10), truncation_radius(1.0, 2.0, 1e-10));
  EXPECT_LT(truncation_radius(1.0 / 16.0, 4.0, 1e-12), r2);
}

TEST(TruncationRadius, RejectsBadInput) {
  EXPECT_THROW(truncation_radius(0.0, 2.0, 1e-8), DomainError);
  EXPECT_THROW(truncation_radius(1.0, 2.0, 0.0), DomainError);
}

TEST(RotatedRay, AiryDefiningIntegral) {
  RayIntegrandSpec s;
  s.evaluator = [](cplx u) { return std::exp(I * u * u * u / 3.0); };
  s.damping = {1.0 / 3.0, 3.0, 0.0, 1.0};
  const QuadratureResult r = rotated_line_integral(s, pi / 6, 5 * pi / 6, 1e-12);
  EXPECT_LE(std::abs(r.value - 2 * pi * airy_ai(0.0).value), 1e-8);
}

TEST(RotatedRay, QuarticMomentByRotation) {
  const cplx b = std::polar(1.0, pi / 4);
  RayIntegrandSpec s;
  s.evaluator = [b](cplx u) { return u * std::exp(-b * u * u * u * u); };
  s.damping = {1.0, 4.0, 0.0, 2.0};
  const QuadratureResult r = rotated_ray_integral(s, -pi / 16, 1e-12);
  EXPECT_LE(std::abs(r.value - 0.25 * std::sqrt(pi) / std::sqrt(b)), 1e-8);
}

TEST(RotatedRay, AngleZeroMatchesRealLine) {
  RayIntegrandSpec s;
  s.evaluator = [](cplx u) { return std::exp(-u * u) * std::cos(u); };
  s.damping = {1.0, 2.0, 0.0, 1.0};
  IntegrandSpec t;
  t.evaluator = [](double u) { return u >= 0 ? std::exp(-u * u) * std::cos(u) : 0.0; };
  t.damping = {1.0, 2.0, 0.0, 1.0};
  EXPECT_LE(std::abs(rotated_ray_integral(s, 0.0, 1e-12).value - integrate_1d(t, 1e-12).value), 1e-11);
}

TEST(RotatedRay, DetectsGrowth) {
  RayIntegrandSpec s;
  s.evaluator = [](cplx u) { return std::exp(u * u * u / 3.0); };
  s.damping = {1.0 / 3.0, 3.0, 0.0, 1.0};
  EXPECT_THROW(rotated_ray_integral(s, 0.0, 1e-8), ContourError);
}

// Properties

TEST(QuadratureProperty, HalvingTolStaysWithinEstimate) {
  std::vector<IntegrandSpec> battery{gaussian_spec(0.0), gaussian_spec(3.0), gaussian_spec(20.0)};
  IntegrandSpec q;
  q.evaluator = [](double u) { return std::exp(cplx(-u * u * u * u / 32.0, u * u)); };
  q.damping = {1.0 / 32.0, 4.0, 0.0, 1.0};
  battery.push_back(q);
  for (const auto& s : battery)
    for (double tol : {1e-6, 1e-8, 1e-10}) {
      const QuadratureResult a = integrate_1d(s, tol), b = integrate_1d(s, tol / 2);
      EXPECT_LE(std::abs(a.value - b.value), std::max(a.error_estimate, 1e-15)) << "tol=" << tol;
    }
}

TEST(QuadratureProperty, TruncationRadiiSatisfyBound) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> la(-3, 3), lt(-16, -4);
  for (int i = 0; i < 200; ++i) {
    const double a = std::pow(10.0, la(rng)), p = (i % 2) ? 2.0 : 4.0, tol = std::pow(10.0, lt(rng));
    const double R = truncation_radius(a, p, tol);
    EXPECT_LE(tail_bound(a, p, R), tol * (1 + 1e-9)) << a << " " << p << " " << tol;
    EXPECT_GT(tail_bound(a, p, 0.999 * R), tol * (1 - 1e-9)) << a << " " << p << " " << tol;
  }
}

TEST(QuadratureProperty, SerialAndParallelBitIdentical) {
  const IntegrandSpec s = gaussian_spec(7.0);
  const QuadratureResult a = integrate_1d(s, 1e-12, Exec::serial);
  const QuadratureResult b = integrate_1d(s, 1e-12, Exec::parallel);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.error_estimate, b.error_estimate);
  EXPECT_EQ(a.panel_count, b.panel_count);

  NdIntegrandSpec n;
  n.evaluator = [](std::span<const double> v) { return std::exp(cplx(-v[0] * v[0] - v[1] * v[1], 3 * v[0] * v[1])); };
  n.damping = {{1.0, 2.0, 0.0, 1.0}, {1.0, 2.0, 0.0, 1.0}};
  EXPECT_EQ(integrate_nd(n, 2, 1e-9, Exec::serial).value, integrate_nd(n, 2, 1e-9, Exec::parallel).value);
}
