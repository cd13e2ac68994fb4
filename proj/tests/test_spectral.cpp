#include <gtest/gtest.h>

#include <random>

#include "graze/grazing.hpp"
#include "graze/oracles.hpp"
#include "graze/spectral.hpp"

using namespace graze;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// f-hat before the t-integration: the (z, s) double integral with s = t - t(z)
cplx boundary_hat_2d(double eta, double tau, double k, double tol) {
  NdIntegrandSpec spec;
  spec.evaluator = [=](std::span<const double> v) {
    const double z = v[0], s = v[1], z3 = z * z * z;
    const cplx phase = -z * eta - tau * (s + z + z3 / 12.0) + k * (-z3 / 8.0 - s);
    return std::exp(I * phase - k * z3 * z / 32.0 - k * s * s / 2.0);
  };
  spec.damping = {{k / 32.0, 4.0, 0.0, 1.0}, {k / 2.0, 2.0, 0.0, 1.0}};
  return integrate_nd(spec, 2, tol).value;
}

double ray_t(double x) { return 2 * std::sqrt(x) + 2.0 / 3.0 * std::pow(x, 1.5); }

}  // namespace

TEST(Zeta, Examples) {
  for (double tau : {-3.0, 0.5, 7.0}) EXPECT_EQ(zeta(0.0, tau, tau).value, cplx(0.0));
  EXPECT_LE(std::abs(zeta(1.0, 0.0, -1.0).value - 2.0 * std::polar(1.0, -pi / 3)), 1e-15);
  const double x = 0.7, mu = 0.8, nu = -1.1, k = 40;
  const cplx expect = std::pow(-nu * k, 2.0 / 3.0) * std::polar(1.0, -pi / 3) * (1 + x - mu * mu / (nu * nu));
  EXPECT_LE(rel(zeta_scaled(x, mu, nu, k).value, expect), 1e-14);
  EXPECT_LE(rel(zeta(x, k * mu, k * nu).value, expect), 1e-14);
  EXPECT_THROW(zeta(1.0, 1.0, 0.0), DomainError);
}

TEST(Zeta, PowerThreeHalves) {
  EXPECT_NEAR(std::abs(zeta_power_3_2(zeta_scaled(1.0, -1.0, -1.0, 8.0))), 8.0, 1e-13);
  EXPECT_LE(std::abs(zeta_power_3_2(zeta_scaled(0.44, 1.2, -1.0, 8.0))), 1e-12);
  EXPECT_THROW(zeta_power_3_2(zeta_scaled(0.1, 1.5, -1.0, 8.0)), BranchError);
  EXPECT_THROW(zeta_power_3_2(zeta(0.1, 1.0, -1.0)), DomainError);
  for (double mu : {0.0, 0.5, 1.0, 1.3})
    EXPECT_LE(std::abs(std::exp(-2.0 / 3.0 * zeta_power_3_2(zeta_scaled(1.0, mu, -1.0, 30.0)))), 1.0 + 1e-15);
}

TEST(Zeta, BranchProperties) {
  for (double tau = -50; tau <= 50; tau += 0.5) {
    if (tau == 0) continue;
    const cplx b = zeta(0.3, 0.1, tau).branch_factor;
    EXPECT_LE(std::abs(b * b * b + tau * tau) / (tau * tau), 1e-12) << tau;
    EXPECT_GE(std::pow(b, 1.5).real(), -1e-12 * std::abs(tau)) << tau;
  }
}

TEST(NegPow, Convention) {
  EXPECT_DOUBLE_EQ(neg_pow(-8.0, 1.0 / 3.0), 2.0);
  EXPECT_DOUBLE_EQ(neg_pow(-8.0, 2.0 / 3.0), 4.0);
  EXPECT_LE(std::abs(neg_pow(cplx(-8.0), -4.0 / 3.0) - neg_pow(-8.0, -4.0 / 3.0)), 1e-16);
  EXPECT_THROW(neg_pow(1.0, 0.5), DomainError);
}

TEST(BoundaryHat, GaussianFactorRatio) {
  const double k = 1e4;
  const double shifted = k * (1 + 3 / std::sqrt(k));
  const double ratio = std::abs(boundary_hat_frozen(shifted, -shifted, k)) / std::abs(boundary_hat_frozen(k, -k, k));
  EXPECT_NEAR(ratio / std::exp(-4.5), 1.0, 0.1);
}

TEST(BoundaryHat, MatchesTwoDimensionalOracle) {
  const cplx f = boundary_hat_frozen(100, -100, 100);
  EXPECT_GT(std::abs(f), 1e-3);
  EXPECT_LE(std::abs(f - boundary_hat_2d(100, -100, 100, 1e-10)), 1e-6);
}

TEST(BoundaryHat, SmoothInEta) {
  const double k = 100, tau = -100, h = 1e-4;
  const cplx a = boundary_hat_frozen(99.9 - h, tau, k), b = boundary_hat_frozen(99.9, tau, k),
             c = boundary_hat_frozen(99.9 + h, tau, k);
  EXPECT_LE(std::abs(a - 2.0 * b + c), 1e-6 * std::abs(b));
}

TEST(BoundaryHatFull, FrozenAtZero) {
  for (double mu : {-0.5, 0.0, 1.2})
    EXPECT_LE(std::abs(rho_full(0.0, mu, -1.1) - rho_frozen(0.0, mu, -1.1)), 1e-15);
}

TEST(BoundaryHatFull, CloseToFrozenAtLargeK) {
  const double k = 1e4;
  const cplx full = boundary_hat_full(k, -k, k), frozen = boundary_hat_frozen(k, -k, k);
  EXPECT_LE(rel(full, frozen), 0.1);
}

TEST(PhaseFull, ImaginaryPartNonnegative) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 100; ++i) {
    const double nu = -1 + 0.5 * u(rng), mu = nu * 0.9 * u(rng);
    EXPECT_GE(phase_full(u(rng), 0.5, u(rng), u(rng), mu, nu, u(rng)).imag(), 0.0);
  }
}

TEST(PhaseFull, GradientVanishesOnGraze) {
  for (double x : {0.25, 1.0, 2.0}) {
    const double z = 0.1, y = z + 2 * std::sqrt(x), nu = -1.0, t = 0.3;
    auto of_s = [&](double s) { return phase_full(t, x, y, z, s - nu, nu, 0.0); };
    auto of_T = [&](double T) { return phase_full(t, x, y, z, -nu, nu, T); };
    EXPECT_LE(std::abs(oracle::derivative(of_s, 0.0, 1, 1e-3)), 1e-8) << x;
    EXPECT_LE(std::abs(oracle::derivative(of_T, 0.0, 1, 1e-3)), 1e-8) << x;
  }
}

TEST(PhaseFull, DomainViolation) { EXPECT_THROW(phase_full(0, 0.1, 0, 0, 2.0, -1.0, 0), DomainError); }

TEST(ReciprocalFactor, ZetaZeroCase) {
  const double k = 27, T = 0.4;
  EXPECT_LE(std::abs(reciprocal_airy_factor(T, 1.0, -1.0, k) - (I * 3.0 * T - omega * airy_ratio(0.0))), 1e-14);
}

TEST(ReciprocalFactor, Identity) {
  const double k = 50, mu = 0.9, nu = -1;
  const QuadratureResult r = reciprocal_integral(mu, nu, k);
  const cplx expect = 1.0 / airy_ai(zeta_scaled(0.0, mu, nu, k).value).value;
  EXPECT_LE(rel(r.value, expect), 1e-3);
}

TEST(ReciprocalFactor, LargeZeta) {
  // factor -> i k^{1/3} T + omega zeta0^{1/2}
  const double k = 1e4, mu = 0.2, nu = -1, T = 0.3;
  const cplx z0 = zeta_scaled(0.0, mu, nu, k).value;
  const cplx lead = I * std::cbrt(k) * T + omega * std::sqrt(z0);
  EXPECT_LE(rel(reciprocal_airy_factor(T, mu, nu, k), lead), 1e-2);
}

TEST(AmplitudeZ, Scaling) {
  const double x = 1;
  const cplx r = amplitude_Z(4000, x, 1.0, -1.0, 0.0) / amplitude_Z(1000, x, 1.0, -1.0, 0.0);
  EXPECT_LE(std::abs(r / std::pow(4.0, 5.0 / 3.0) - 1.0), 0.01);
}

TEST(AmplitudeZ, FiniteAndConsistent) {
  const cplx z = amplitude_Z(1e3, 1.0, 1.0, -1.0, 0.0);
  EXPECT_TRUE(std::isfinite(z.real()) && std::isfinite(z.imag()));
  EXPECT_LE(std::abs(amplitude_Z(50, 0.5, 0.8, -1.05, 0.2) -
                     amplitude_Z(50, 0.5, cplx(0.8), cplx(-1.05), cplx(0.2))),
            1e-15 * std::abs(amplitude_Z(50, 0.5, 0.8, -1.05, 0.2)));
  // principal branch of zeta^{-1/4} continuous in x
  cplx prev = amplitude_Z(200, 0.01, 0.7, -1.0, 0.0);
  for (double x = 0.02; x <= 4; x += 0.01) {
    const cplx cur = amplitude_Z(200, x, 0.7, -1.0, 0.0);
    EXPECT_LE(std::abs(cur - prev), 0.05 * std::abs(prev)) << x;
    prev = cur;
  }
}

TEST(ExactSolution, ConcentratesOnRay) {
  const double x = 0.5, y = 2 * std::sqrt(x), t = ray_t(x), k = 200;
  const QuadratureResult on = exact_solution(x, y, t, k);
  const QuadratureResult off = exact_solution(x, y, t + 1, k);
  EXPECT_LE(std::abs(off.value), 1e-3 * std::abs(on.value));
}

TEST(ExactSolution, LinearInBoundaryData) {
  const double x = 0.5, y = 2 * std::sqrt(x), t = ray_t(x), k = 60;
  ExactSolutionOptions one, two;
  one.tol = two.tol = 1e-4;
  two.boundary_scale = 2;
  EXPECT_EQ(2.0 * exact_solution(x, y, t, k, one).value, exact_solution(x, y, t, k, two).value);
}

TEST(ExactSolution, AgreesWithUIntegralAtThousand) {
  const double x = 0.5;
  const cplx spectral = spectral_on_ray(x, 1e3).w_value;
  const cplx u = u_integral(x, 1e3).w_value;
  EXPECT_LE(rel(spectral, u), 0.2);
}

TEST(ExactSolution, RefusesLargeK) {
  EXPECT_THROW(exact_solution(0.5, 1.4, 1.6, 2e4), DomainError);
  EXPECT_THROW(exact_solution(0.0, 1.4, 1.6, 100), DomainError);
}

TEST(ExactSolution, SerialAndParallelBitIdentical) {
  const double x = 0.5, y = 2 * std::sqrt(x), t = ray_t(x), k = 60;
  ExactSolutionOptions s, p;
  s.tol = p.tol = 1e-4;
  s.exec = Exec::serial;
  p.exec = Exec::parallel;
  EXPECT_EQ(exact_solution(x, y, t, k, s).value, exact_solution(x, y, t, k, p).value);
}

// Properties

TEST(SpectralProperty, ReciprocalIdentityStraddlingTurningPoint) {
  const double k = 50, nu = -1;
  for (double mu : {0.8, 0.95, 1.0, 1.05, 1.2}) {
    const QuadratureResult r = reciprocal_integral(mu, nu, k);
    const cplx expect = 1.0 / airy_ai(zeta_scaled(0.0, mu, nu, k).value).value;
    EXPECT_LE(rel(r.value, expect), 1e-3) << mu;
  }
}

TEST(SpectralProperty, PhaseGradientMatchesDifferences) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 50; ++i) {
    const double x = 0.2 + 0.8 * (u(rng) + 1), nu = -1 + 0.3 * u(rng), mu = -nu * 0.9 * u(rng);
    const double y = u(rng), z = 0.5 * u(rng), t = u(rng), T = u(rng);
    const double s = mu + nu;
    const PhaseGradient g = phase_full_gradient(x, y, z, mu, nu, T);
    auto of_s = [&](double v) { return phase_full(t, x, y, z, v - nu, nu, T); };
    auto of_T = [&](double v) { return phase_full(t, x, y, z, mu, nu, v); };
    EXPECT_LE(std::abs(oracle::derivative(of_s, s, 1, 1e-3) - g.d_s), 1e-6);
    EXPECT_LE(std::abs(oracle::derivative(of_T, T, 1, 1e-3) - g.d_T), 1e-6);
  }
}
