#include "graze/spectral.hpp"

#include <array>
#include <atomic>
#include <cmath>

#include "graze/ray_beam.hpp"

namespace graze {

namespace {

const cplx e_minus_i_pi_3 = std::polar(1.0, -pi / 3.0);

void require_negative_nu(double nu, const char* who) {
  if (!(nu < 0.0)) throw DomainError(std::string(who) + ": requires nu < 0");
}

// t(z) on the central ray
double ray_time(double z) { return z + z * z * z / 12.0; }

}  // namespace

double neg_pow(double nu, double p) {
  require_negative_nu(nu, "neg_pow");
  return std::pow(-nu, p);
}

cplx neg_pow(cplx nu, double p) { return std::pow(-nu, p); }

ZetaValue zeta(double x, double eta, double tau) {
  if (tau == 0.0) throw DomainError("zeta: tau = 0");
  ZetaValue z;
  z.branch_factor = std::polar(std::pow(std::abs(tau), 2.0 / 3.0), tau > 0 ? pi / 3.0 : -pi / 3.0);
  z.value = z.branch_factor * (1.0 + x - eta * eta / (tau * tau));
  z.regime = ZetaRegime::exact_branch;
  return z;
}

ZetaValue zeta_scaled(double x, double mu, double nu, double k) {
  require_negative_nu(nu, "zeta_scaled");
  if (!(k > 0.0)) throw DomainError("zeta_scaled: k must be positive");
  ZetaValue z;
  z.scale = neg_pow(nu, 1.0) * k;
  z.radicand = 1.0 + x - mu * mu / (nu * nu);
  z.branch_factor = std::pow(z.scale, 2.0 / 3.0) * e_minus_i_pi_3;
  z.value = z.branch_factor * z.radicand;
  z.regime = ZetaRegime::scaled_near_nu_minus_one;
  return z;
}

cplx zeta_power_3_2(const ZetaValue& z) {
  if (z.regime != ZetaRegime::scaled_near_nu_minus_one)
    throw DomainError("zeta_power_3_2: requires the scaled regime");
  if (z.radicand < 0.0)
    throw BranchError("zeta_power_3_2: 1 + x - mu^2/nu^2 = " + fmt_num(z.radicand) +
                      " is negative; its 3/2 power is on a branch cut");
  return z.scale * cplx(0.0, -1.0) * std::pow(z.radicand, 1.5);
}

cplx boundary_hat_frozen(double eta, double tau, double k, double tol) {
  if (!(k > 0.0)) throw DomainError("boundary_hat_frozen: k must be positive");
  IntegrandSpec spec;
  spec.evaluator = [=](double z) {
    const double z2 = z * z, z3 = z2 * z;
    return std::exp(cplx(-k * z2 * z2 / 32.0, -z * eta - tau * (z + z3 / 12.0) - k * z3 / 8.0));
  };
  spec.damping = {k / 32.0, 4.0, 0.0, 1.0};
  spec.oscillation_scale = std::abs(eta + tau);
  const QuadratureResult r = integrate_1d(spec, tol);
  return std::sqrt(2.0 * pi / k) * std::exp(-(tau + k) * (tau + k) / (2.0 * k)) * r.value;
}

cplx rho_full(double z, double mu, double nu) {
  const Mat2 M = beam_matrix(z).M;
  const double z2 = z * z;
  const cplx q = nu + 1.0 + z2 * M(0, 1) / 4.0;
  return nu * ray_time(z) + mu * z + z2 * z / 8.0 - z2 * z2 * M(0, 0) / 32.0 + q * q / (2.0 * M(1, 1));
}

cplx rho_frozen(double z, double mu, double nu) {
  const double z2 = z * z;
  return nu * ray_time(z) + mu * z + z2 * z / 8.0 - I * z2 * z2 / 32.0 + (nu + 1.0) * (nu + 1.0) / (2.0 * I);
}

cplx boundary_hat_full(double eta, double tau, double k, double tol) {
  if (!(k > 0.0)) throw DomainError("boundary_hat_full: k must be positive");
  const double mu = eta / k, nu = tau / k;
  IntegrandSpec spec;
  spec.evaluator = [=](double z) {
    const BeamFrame f = beam_matrix(z);
    const cplx pref = std::sqrt(2.0 * pi / (-I * k * f.M(1, 1)));
    return pref * f.a * std::exp(-I * k * rho_full(z, mu, nu));
  };
  // Im rho >= z^4 Im(-M11)/32 + ..., dominated near the ray by the frozen quartic;
  // a factor 2 slack covers the variation of M over the truncated range
  spec.damping = {k / 64.0, 4.0, 0.0, std::sqrt(2.0 * pi / k) * 2.0};
  spec.oscillation_scale = std::abs(eta + tau);
  return integrate_1d(spec, tol).value;
}

cplx phase_full(double t, double x, double y, double z, double mu, double nu, double T) {
  require_negative_nu(nu, "phase_full");
  const double g0 = 1.0 - mu * mu / (nu * nu);
  const double gx = 1.0 + x - mu * mu / (nu * nu);
  if (gx < 0.0)
    throw DomainError("phase_full: radicand 1 + x - mu^2/nu^2 = " + fmt_num(gx) + " is negative");
  const double an = neg_pow(nu, 1.0);
  const double z3 = z * z * z;
  const double re = (y - z) * mu + t * nu - nu * (z + z3 / 12.0) - z3 / 8.0 +
                    2.0 * an / 3.0 * std::pow(gx, 1.5) - neg_pow(nu, 2.0 / 3.0) * g0 * T + T * T * T / 3.0;
  const double im = z3 * z / 32.0 + 0.5 * (nu + 1.0) * (nu + 1.0);
  return {re, im};
}

PhaseGradient phase_full_gradient(double x, double y, double z, double mu, double nu, double T) {
  require_negative_nu(nu, "phase_full_gradient");
  const double gx = 1.0 + x - mu * mu / (nu * nu);
  if (gx < 0.0) throw DomainError("phase_full_gradient: negative radicand " + fmt_num(gx));
  const double s = mu + nu;
  PhaseGradient g;
  g.d_s = (y - z) - 2.0 * mu * std::sqrt(gx) / neg_pow(nu, 1.0) + 2.0 * mu * T * neg_pow(nu, -4.0 / 3.0);
  g.d_T = T * T - neg_pow(nu, -4.0 / 3.0) * s * (2.0 * nu - s);
  return g;
}

cplx reciprocal_airy_factor(double T, double mu, double nu, double k) {
  const ZetaValue z0 = zeta_scaled(0.0, mu, nu, k);
  return I * std::cbrt(k) * T - omega * airy_ratio(z0.value);
}

QuadratureResult reciprocal_integral(double mu, double nu, double k, double tol) {
  const ZetaValue z0 = zeta_scaled(0.0, mu, nu, k);
  const cplx ratio = airy_ratio(z0.value);
  const double c = neg_pow(nu, 2.0 / 3.0) * z0.radicand;
  const double k3 = std::cbrt(k);
  RayIntegrandSpec spec;
  spec.evaluator = [=](cplx T) {
    return (I * k3 * T - omega * ratio) * std::exp(I * k * (-c * T + T * T * T / 3.0)) * k3;
  };
  // along arg T = pi/6 or 5pi/6 the modulus is poly(r) exp(k |c| r / 2 - k r^3 / 3);
  // bound it by E exp(-k r^3 / 6) with E from a scan
  double envelope = 0.0;
  const double rmax = 4.0 * std::max(1.0, std::sqrt(std::abs(c))) + 10.0 / k3;
  for (int i = 0; i <= 400; ++i) {
    const double r = rmax * i / 400.0;
    const double m = k3 * (k3 * r + std::abs(ratio)) *
                     std::exp(k * std::abs(c) * r / 2.0 - k * r * r * r / 6.0);
    envelope = std::max(envelope, m);
  }
  spec.damping = {k / 6.0, 3.0, 0.0, 2.0 * envelope};
  QuadratureResult r = rotated_line_integral(spec, pi / 6.0, 5.0 * pi / 6.0, tol * std::abs(ratio));
  const cplx norm = 1.0 / (2.0 * pi * wronskian_zero());
  r.value *= norm;
  r.error_estimate *= std::abs(norm);
  return r;
}

cplx amplitude_Z(double k, double x, double mu, double nu, double T) {
  require_negative_nu(nu, "amplitude_Z");
  return amplitude_Z(k, x, cplx(mu), cplx(nu), cplx(T));
}

cplx amplitude_Z(double k, double x, cplx mu, cplx nu, cplx T) {
  if (!(x > 0.0)) throw DomainError("amplitude_Z: x must be positive");
  if (!(k > 0.0)) throw DomainError("amplitude_Z: k must be positive");
  const cplx beta = std::pow(k, 2.0 / 3.0) * neg_pow(nu, 2.0 / 3.0) * e_minus_i_pi_3;
  const cplx m2 = mu * mu / (nu * nu);
  const cplx z0 = beta * (1.0 - m2);
  const cplx zx = beta * (1.0 + x - m2);
  const double pre = std::pow(k, 11.0 / 6.0) / (std::sqrt(2.0) * std::pow(2.0 * pi, 3.0));
  return pre / wronskian_zero() * (I * std::cbrt(k) * T - omega * airy_ratio(z0)) * std::pow(zx, -0.25);
}

QuadratureResult exact_solution(double x, double y, double t, double k, const ExactSolutionOptions& opt) {
  if (!(x > 0.0)) throw DomainError("exact_solution: x must be positive");
  if (!(k > 0.0)) throw DomainError("exact_solution: k must be positive");
  if (k > opt.max_k)
    throw DomainError("exact_solution: k = " + fmt_num(k) + " exceeds the configured budget " +
                      fmt_num(opt.max_k));
  if (!(opt.tol > 0.0)) throw DomainError("exact_solution: tol must be positive");
  if (!(std::abs(opt.boundary_scale) > 0.0)) throw DomainError("exact_solution: boundary_scale must be nonzero");

  // Radii from the explicit Gaussian factors, plus the decay of the z-transform
  // in s = mu + nu, roughly exp(-0.75 k |s|^{4/3}); the s radius carries a
  // factor 2 of slack over that estimate.
  const double eps = 1e-3 * opt.tol;
  const double Rn = truncation_radius(k / 2.0, 2.0, eps);
  const double Rz = truncation_radius(k / 32.0, 4.0, eps);
  const double Rs = 2.0 * std::pow(std::log(1.0 / eps) / (0.75 * k), 0.75);

  const double pref = std::pow(k / (2.0 * pi), 1.5) * opt.boundary_scale;
  const double abs_tol = 1e-3 * opt.tol;

  std::atomic<double> worst_s{0.0}, worst_z{0.0};
  std::atomic<bool> failed{false};
  auto record = [](std::atomic<double>& slot, double v) {
    double cur = slot.load();
    while (v > cur && !slot.compare_exchange_weak(cur, v)) {
    }
  };

  QuadOptions oz;
  oz.rel_tol = opt.tol / 16.0;
  oz.abs_tol = abs_tol / (16.0 * 2.0 * Rn * 2.0 * Rs);
  oz.max_panels = opt.max_panels;
  oz.initial_panels = 8;
  QuadOptions os = oz;
  os.rel_tol = opt.tol / 4.0;
  // the outer tolerances follow the boundary data's scale, so scaling it scales w exactly
  const double data_scale = std::abs(opt.boundary_scale);
  os.abs_tol = data_scale * abs_tol / (4.0 * 2.0 * Rn);
  os.initial_panels = std::max(8, static_cast<int>(std::ceil(k * std::abs(y) * 2.0 * Rs / (2.5 * 2.0 * pi))));
  QuadOptions on = oz;
  on.rel_tol = opt.tol / 2.0;
  on.abs_tol = data_scale * abs_tol / 2.0;
  on.exec = opt.exec;
  on.initial_panels = std::max(8, static_cast<int>(std::ceil(k * std::abs(t + y) * 2.0 * Rn / (2.5 * 2.0 * pi))));

  const double zero[] = {0.0};
  const double minus_one[] = {-1.0};

  auto over_z = [&](double mu, double nu) {
    const double g = (nu + 1.0) * (nu + 1.0) / 2.0;
    auto fz = [=](double z) {
      const double z2 = z * z, z3 = z2 * z;
      const double re = -z * mu - nu * (z + z3 / 12.0) - z3 / 8.0;
      const double im = z2 * z2 / 32.0 + g;
      return std::exp(I * k * cplx(re, im));
    };
    return integrate_interval(fz, -Rz, Rz, oz, zero);
  };

  auto over_s = [&](double nu) {
    const double an = neg_pow(nu, 1.0);
    const cplx beta = std::pow(an * k, 2.0 / 3.0) * e_minus_i_pi_3;
    auto fs = [&, nu, beta](double s) {
      const double mu = s - nu;
      const double m2 = mu * mu / (nu * nu);
      const cplx zx = beta * (1.0 + x - m2), z0 = beta * (1.0 - m2);
      // Ai(zx)/Ai(z0) from scaled values
      const AiryValue ax = airy_ai_scaled(zx), a0 = airy_ai_scaled(z0);
      const cplx quotient = ax.value / a0.value * std::exp(airy_zeta(z0) - airy_zeta(zx));
      const QuadratureResult F = over_z(mu, nu);
      record(worst_z, F.error_estimate * std::abs(quotient) * pref);
      if (!F.converged) failed.store(true);
      return pref * std::exp(I * k * y * mu) * quotient * F.value;
    };
    return integrate_interval(fs, -Rs, Rs, os, zero);
  };

  auto fn = [&](double nu) {
    const QuadratureResult S = over_s(nu);
    record(worst_s, S.error_estimate);
    if (!S.converged) failed.store(true);
    return std::exp(I * k * t * nu) * S.value;
  };

  QuadratureResult r = integrate_interval(fn, -1.0 - Rn, -1.0 + Rn, on, minus_one);
  r.error_estimate += 2.0 * Rn * worst_s.load() + 2.0 * Rn * 2.0 * Rs * worst_z.load() + 3.0 * eps * data_scale;
  r.truncation_radius = std::max({Rn, Rz, Rs});
  r.converged = r.converged && !failed.load();
  return r;
}

}  // namespace graze
