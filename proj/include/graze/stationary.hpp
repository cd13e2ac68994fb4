#pragma once

#include <array>
#include <functional>
#include <limits>

#include "graze/quadrature.hpp"

namespace graze {

// plus: 4x > (y-z)^2, minus: 4x < (y-z)^2. The grazing set itself counts as plus.
enum class SignBranch { plus, minus };

struct StationaryData {
  double r = 0, s = 0, T = 0;
  SignBranch sign_branch = SignBranch::plus;
  cplx phi_sp;
  double J = 0;
  cplx B;
  double C = 0;
};

// Coefficients about the grazing point z0 = y - 2 sqrt(x), in the form
// c0 + c1 w + c2 w^2 + c3 w^3/6 + c4 w^4/24: c2 is a Taylor coefficient while
// c3 and c4 are the raw third and fourth derivatives.
struct SeriesCoefficients {
  cplx c0, c1, c2, c3, c4;
  double base_x = 0;

  // n-th derivative at the grazing point
  cplx derivative(int n) const;
  cplx evaluate(double w) const;
};

double root_r(double x, double y, double z);

// The other root of the quadratic for r^2; not used by the pipeline.
double root_r_alternate(double x, double y, double z);

// r^4 (x^2 + d^2) - r^2 (x/2 + 1) d^2 + d^4/16 with d = y - z.
double quartic_residual(double r, double x, double y, double z);

SignBranch sign_branch(double x, double y, double z);

StationaryData stationary_point(double t, double x, double y, double z, double nu);

cplx phi_sp(double t, double x, double y, double nu, double z);

// 4 |nu|^{-2/3} [s X^{-1/2} r^2 q^{1/2} - s X^{1/2} q^{1/2} + q - r^2] with
// q = 1 - r^2, X = x + q and s = +1 on the plus side, -1 on the minus side.
double hessian_J(double x, double nu, double r, SignBranch side = SignBranch::plus);

// The same with (-nu)^{-2/3} continued to complex nu.
cplx hessian_J(double x, cplx nu, double r, SignBranch side);

cplx B_of_z(double z);

double C_of(double x, double y, double z, double t);

// -z + r(y-z) + (y-z)^3/(48 r^3) + r x^2/(y-z), so that C = t + phi - z^3/12.
double phi_reduced(double x, double y, double z);

// (2 pi/k)^{1/2} amp(-1 + iC) e^{ik(B - C) - k C^2/2}
cplx nu_descent(double x, double y, double z, double t, double k,
                const std::function<cplx(cplx)>& amp);

// z-integrand of the reduced representation: the stationary-phase amplitude
// evaluated at nu = -1 + iC, times the descended exponential.
cplx reduced_integrand(double x, double y, double t, double k, double z);

// Integral of reduced_integrand over the admissible z-range.
QuadratureResult reduced_solution(double x, double y, double t, double k, double tol = 1e-8,
                                  Exec exec = Exec::serial);

SeriesCoefficients series_r(double x);

// y defaults to 2 sqrt(x), i.e. the grazing point z0 = 0.
SeriesCoefficients series_phi(double x, double y = std::numeric_limits<double>::quiet_NaN());

// [-(3/8)(sqrt x - 1/sqrt x) + 3i/4] / 24
cplx quartic_coefficient(double x);

// i(B - C) - C^2/2, the descended exponent with M frozen at i I.
cplx descended_exponent_frozen(double x, double y, double z, double t);

// The descended exponent with the full M(z): i(B_M - C) - i q C + i M22 C^2/2
// with B_M = -z^3/8 + z^4 M11/32 and q = z^2 M12/4.
cplx descended_exponent_full(double x, double y, double z, double t);

// (2 pi / (-i M22(z)))^{1/2} a(z)
cplx full_amplitude_prefactor(double z);

}  // namespace graze
