#pragma once

#include <limits>
#include <string>
#include <vector>

#include "graze/quadrature.hpp"

namespace graze {

enum class Method { closed, u_integral, z_integral, spectral };

std::string to_string(Method m);
// "closed", "u-integral", "z-integral", "spectral"
Method parse_method(const std::string& name);

struct GrazingResult {
  double x = 0;
  double k = std::numeric_limits<double>::infinity();  // infinite for the closed form
  cplx w_value;
  Method method = Method::closed;
  double error_estimate = 0;
  bool converged = true;
};

// (4 pi)^{-3/2} e^{i pi/12} / W(0)
cplx constant_c();

// Integral of u e^{-b u^4} over [0, inf): Gamma(1/2) b^{-1/2} / 4.
cplx quartic_moment(cplx b);

// The same moment over the whole line, which vanishes by symmetry.
cplx quartic_moment_full_line(cplx b);

// Integrand of the u-representation without the c / x^{1/4} prefactor.
cplx u_integrand(double x, double k, double u);

// (c / x^{1/4}) times the u-integral; `truncation` <= 0 picks the radius from tol.
GrazingResult u_integral(double x, double k, double tol = 1e-10, double truncation = 0.0);

// u_integral over a list of k, evaluated concurrently under Exec::parallel.
std::vector<GrazingResult> u_integral_ladder(double x, const std::vector<double>& ks, double tol,
                                             Exec exec = Exec::serial);

// k -> infinity limit, through quartic_moment.
cplx limit_integral(double x);

// The k -> infinity integral by direct quadrature.
QuadratureResult limit_integral_quadrature(double x, double tol = 1e-11);

// (1/2)(1 - x + 2i sqrt x)^{-1/2}
cplx w_on_ray_closed(double x);

// |3 e^{i pi/3} / (2 (-3 + 3x - 6i sqrt x)^{1/2} (omega - 1)) - w_on_ray_closed(x)|
double closed_form_identity_check(double x);

// beam_on_ray(x) - w_on_ray_closed(x)
cplx reflected_amplitude(double x);

// Reduced z-integral on the ray.
GrazingResult z_integral(double x, double k, double tol = 1e-9, Exec exec = Exec::serial);

// exact_solution on the ray.
GrazingResult spectral_on_ray(double x, double k, double tol = 1e-5, Exec exec = Exec::parallel);

// Dispatch on the method; closed ignores k.
GrazingResult w_on_ray(double x, double k, Method m, double tol, Exec exec = Exec::serial);

struct DerivativeReport {
  double x = 0, k = 0;
  cplx ratio_x;  // (d_x w) / (i k sqrt(x) w)
  cplx ratio_y;  // (d_y w) / (i k w)
  double c_xzz = 0, c_xzz_expected = 0;
  double c_yzz = 0, c_yzz_expected = 0;
  std::string caveat;
};

// Derivatives of the reduced z-integral through the nu-weighted x and y
// dependence of C.
DerivativeReport derivative_consistency(double x, double k, double tol = 1e-9);

}  // namespace graze
