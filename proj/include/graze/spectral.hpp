#pragma once

#include "graze/airy.hpp"
#include "graze/quadrature.hpp"

namespace graze {

// Scaled frequencies eta = k mu, tau = k nu, with s = mu + nu and the auxiliary
// variable T of the reciprocal-Airy representation.
struct SpectralCoords {
  double mu = 0, nu = 0, s = 0, T = 0, k = 1;

  static SpectralCoords from_mu(double mu, double nu, double T, double k) { return {mu, nu, mu + nu, T, k}; }
  static SpectralCoords from_s(double s, double nu, double T, double k) { return {s - nu, nu, s, T, k}; }
};

enum class ZetaRegime { exact_branch, scaled_near_nu_minus_one };

struct ZetaValue {
  cplx value;
  cplx branch_factor;  // beta
  ZetaRegime regime = ZetaRegime::exact_branch;
  double scale = 0;     // |nu| k in the scaled regime
  double radicand = 0;  // 1 + x - mu^2/nu^2 in the scaled regime
};

// |nu|^p for nu < 0. Every fractional power of the negative frequency variable
// goes through here (or its continuation below).
double neg_pow(double nu, double p);

// (-nu)^p on the principal branch; equals neg_pow for real nu < 0.
cplx neg_pow(cplx nu, double p);

// beta (1 + x - eta^2/tau^2), beta = |tau|^{2/3} e^{+-i pi/3} for tau >< 0.
ZetaValue zeta(double x, double eta, double tau);

// zeta(x, k mu, k nu) for nu < 0 in the scaled regime.
ZetaValue zeta_scaled(double x, double mu, double nu, double k);

// zeta^{3/2} = |nu| k e^{-i pi/2} (1 + x - mu^2/nu^2)^{3/2}.
cplx zeta_power_3_2(const ZetaValue& z);

// Boundary data transform with M frozen at i I and a = 1, by 1D quadrature in z.
cplx boundary_hat_frozen(double eta, double tau, double k, double tol = 1e-11);

// Exponent rho(z, mu, nu) with the full M(z).
cplx rho_full(double z, double mu, double nu);

// rho with M = i I.
cplx rho_frozen(double z, double mu, double nu);

// Boundary data transform with the full M(z) and a(z).
cplx boundary_hat_full(double eta, double tau, double k, double tol = 1e-11);

// Four-variable phase; nu^{2/3} read as |nu|^{2/3}.
cplx phase_full(double t, double x, double y, double z, double mu, double nu, double T);

struct PhaseGradient {
  cplx d_s, d_T;
};

// Closed-form (s, T) derivatives of phase_full at fixed nu.
PhaseGradient phase_full_gradient(double x, double y, double z, double mu, double nu, double T);

// ik^{1/3} T - omega Ai'/Ai(zeta(0, k mu, k nu)).
cplx reciprocal_airy_factor(double T, double mu, double nu, double k);

// (1/(2 pi W(0))) times the T-integral of reciprocal_airy_factor against the
// cubic exponential, evaluated on rotated rays; equals 1/Ai(zeta(0, k mu, k nu)).
QuadratureResult reciprocal_integral(double mu, double nu, double k, double tol = 1e-10);

// Leading amplitude factor Z(k, x, mu, nu, T).
cplx amplitude_Z(double k, double x, double mu, double nu, double T);

// Z continued to complex (mu, nu, T), with |nu|^p replaced by (-nu)^p.
cplx amplitude_Z(double k, double x, cplx mu, cplx nu, cplx T);

struct ExactSolutionOptions {
  double tol = 1e-5;
  Exec exec = Exec::parallel;
  double boundary_scale = 1.0;  // multiplies the boundary data transform
  int max_panels = 4000;        // per nested integral
  double max_k = 1e4;
};

// w(x, y, t; k) from the exact Airy-quotient representation by nested
// quadrature over (nu, s, z). Non-convergence is flagged, not thrown.
QuadratureResult exact_solution(double x, double y, double t, double k,
                                const ExactSolutionOptions& opt = {});

}  // namespace graze
