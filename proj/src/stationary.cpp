#include "graze/stationary.hpp"

#include <cmath>

#include "graze/ray_beam.hpp"
#include "graze/spectral.hpp"

namespace graze {

namespace {

constexpr double factorial[5] = {1, 1, 2, 6, 24};

double admissible_gap(double x, double d) {
  const double g = 1.0 + x - d * d / 4.0;
  if (g < -1e-13)
    throw DomainError("root_r: requires 4 + 4x >= (y - z)^2, got x = " + fmt_num(x) +
                      ", y - z = " + fmt_num(d));
  return std::max(g, 0.0);
}

double root_with(double x, double y, double z, double branch) {
  const double d = y - z;
  const double g = admissible_gap(x, d);
  if (x == 0.0 && d == 0.0) throw DegeneracyError("root_r: x = 0 and y = z");
  return -std::sqrt((x / 2.0 + 1.0 + branch * std::sqrt(g)) / (2.0 * (x * x + d * d))) * d;
}

double one_minus_r2(double r) { return std::max(0.0, 1.0 - r * r); }

double side_sign(SignBranch s) { return s == SignBranch::plus ? 1.0 : -1.0; }

double hessian_bracket(double x, double r, SignBranch side) {
  const double q = one_minus_r2(r);
  const double X = x + q;
  if (!(X > 0.0)) throw DomainError("hessian_J: x + (1 - r^2) must be positive, got " + fmt_num(X));
  const double sg = side_sign(side);
  return sg * r * r * std::sqrt(q) / std::sqrt(X) - sg * std::sqrt(X) * std::sqrt(q) + q - r * r;
}

void require_positive_x(double x, const char* who) {
  if (!(x > 0.0)) throw DomainError(std::string(who) + ": requires x > 0");
}

}  // namespace

cplx SeriesCoefficients::derivative(int n) const {
  switch (n) {
    case 0:
      return c0;
    case 1:
      return c1;
    case 2:
      return 2.0 * c2;
    case 3:
      return c3;
    case 4:
      return c4;
    default:
      throw DomainError("SeriesCoefficients: derivative order must be 0..4");
  }
}

cplx SeriesCoefficients::evaluate(double w) const {
  cplx v = 0.0;
  double p = 1.0;
  for (int n = 0; n <= 4; ++n, p *= w) v += derivative(n) * p / factorial[n];
  return v;
}

double root_r(double x, double y, double z) { return root_with(x, y, z, +1.0); }

double root_r_alternate(double x, double y, double z) { return root_with(x, y, z, -1.0); }

double quartic_residual(double r, double x, double y, double z) {
  const double d = y - z, r2 = r * r, d2 = d * d;
  return r2 * r2 * (x * x + d2) - r2 * (x / 2.0 + 1.0) * d2 + d2 * d2 / 16.0;
}

SignBranch sign_branch(double x, double y, double z) {
  const double d = y - z;
  return 4.0 * x >= d * d ? SignBranch::plus : SignBranch::minus;
}

StationaryData stationary_point(double t, double x, double y, double z, double nu) {
  if (!(nu < 0.0)) throw DomainError("stationary_point: requires nu < 0");
  StationaryData s;
  s.r = root_r(x, y, z);
  s.sign_branch = sign_branch(x, y, z);
  s.s = nu * (1.0 + s.r);
  s.T = side_sign(s.sign_branch) * neg_pow(nu, 1.0 / 3.0) * std::sqrt(one_minus_r2(s.r));
  s.phi_sp = phi_sp(t, x, y, nu, z);
  s.J = hessian_J(x, nu, s.r, s.sign_branch);
  s.B = B_of_z(z);
  s.C = C_of(x, y, z, t);
  return s;
}

double phi_reduced(double x, double y, double z) {
  const double d = y - z;
  if (d == 0.0) throw DegeneracyError("phi_reduced: y = z");
  const double r = root_r(x, y, z);
  return -z + r * d + d * d * d / (48.0 * r * r * r) + r * x * x / d;
}

double C_of(double x, double y, double z, double t) {
  if (y == z) throw DegeneracyError("C_of: y = z");
  return t + phi_reduced(x, y, z) - z * z * z / 12.0;
}

cplx B_of_z(double z) {
  const double z3 = z * z * z;
  return {-z3 / 8.0, z3 * z / 32.0};
}

cplx phi_sp(double t, double x, double y, double nu, double z) {
  if (y == z) throw DegeneracyError("phi_sp: y = z");
  const double z3 = z * z * z;
  return {nu * C_of(x, y, z, t) - z3 / 8.0, 0.5 * ((nu + 1.0) * (nu + 1.0) + z3 * z / 16.0)};
}

double hessian_J(double x, double nu, double r, SignBranch side) {
  return 4.0 * neg_pow(nu, -2.0 / 3.0) * hessian_bracket(x, r, side);
}

cplx hessian_J(double x, cplx nu, double r, SignBranch side) {
  return 4.0 * neg_pow(nu, -2.0 / 3.0) * hessian_bracket(x, r, side);
}

cplx nu_descent(double x, double y, double z, double t, double k, const std::function<cplx(cplx)>& amp) {
  if (!(k > 0.0)) throw DomainError("nu_descent: k must be positive");
  const double C = C_of(x, y, z, t);
  const cplx B = B_of_z(z);
  return std::sqrt(2.0 * pi / k) * amp(cplx(-1.0, C)) * std::exp(I * k * (B - C) - 0.5 * k * C * C);
}

cplx reduced_integrand(double x, double y, double t, double k, double z) {
  require_positive_x(x, "reduced_integrand");
  const double r = root_r(x, y, z);
  const SignBranch side = sign_branch(x, y, z);
  auto amp = [&](cplx nu) {
    const cplx T = side_sign(side) * neg_pow(nu, 1.0 / 3.0) * std::sqrt(one_minus_r2(r));
    const cplx mu = nu * r;
    const cplx J = hessian_J(x, nu, r, side);
    return (2.0 * pi / k) * amplitude_Z(k, x, mu, nu, T) / std::sqrt(-J);
  };
  return nu_descent(x, y, z, t, k, amp);
}

QuadratureResult reduced_solution(double x, double y, double t, double k, double tol, Exec exec) {
  require_positive_x(x, "reduced_solution");
  if (!(k > 0.0)) throw DomainError("reduced_solution: k must be positive");
  const double z0 = y - 2.0 * std::sqrt(x);
  const double envelope = std::max(1.0, 4.0 * std::abs(reduced_integrand(x, y, t, k, z0)));
  const double Rz = truncation_radius(k / 32.0, 4.0, tol / (10.0 * envelope));
  const double lo = std::max(z0 - Rz, y - 2.0 * std::sqrt(1.0 + x));
  const double hi = std::min(z0 + Rz, y - 1e-9 * std::max(1.0, std::abs(y)));
  if (!(hi > lo)) throw DomainError("reduced_solution: empty admissible z-range");
  QuadOptions opt;
  opt.abs_tol = 0.9 * tol;
  opt.rel_tol = 0.9 * tol;
  opt.exec = exec;
  const double brk[] = {z0};
  QuadratureResult r = integrate_interval([&](double z) { return reduced_integrand(x, y, t, k, z); },
                                          lo, hi, opt, brk);
  r.truncation_radius = Rz;
  r.error_estimate += 0.1 * tol;
  return r;
}

SeriesCoefficients series_r(double x) {
  require_positive_x(x, "series_r");
  const double sx = std::sqrt(x);
  SeriesCoefficients c;
  c.c0 = -1.0;
  c.c1 = 0.0;
  c.c2 = 1.0 / 8.0;
  c.c3 = 3.0 / 8.0 * (1.0 / sx - sx);
  c.c4 = 15.0 / 16.0 * (x - 1.0 + 1.0 / x);
  c.base_x = x;
  return c;
}

SeriesCoefficients series_phi(double x, double y) {
  require_positive_x(x, "series_phi");
  const double sx = std::sqrt(x);
  if (std::isnan(y)) y = 2.0 * sx;
  SeriesCoefficients c;
  c.c0 = -y - 2.0 / 3.0 * x * sx;
  c.c1 = 0.0;
  c.c2 = 0.0;
  c.c3 = -0.25;
  c.c4 = 3.0 / 8.0 * (sx - 1.0 / sx);
  c.base_x = x;
  return c;
}

cplx quartic_coefficient(double x) {
  require_positive_x(x, "quartic_coefficient");
  const double sx = std::sqrt(x);
  return cplx(-3.0 / 8.0 * (sx - 1.0 / sx), 0.75) / 24.0;
}

cplx descended_exponent_frozen(double x, double y, double z, double t) {
  const double C = C_of(x, y, z, t);
  return I * (B_of_z(z) - C) - 0.5 * C * C;
}

cplx descended_exponent_full(double x, double y, double z, double t) {
  const double C = C_of(x, y, z, t);
  const Mat2 M = beam_matrix(z).M;
  const double z2 = z * z;
  const cplx BM = -z2 * z / 8.0 + z2 * z2 * M(0, 0) / 32.0;
  const cplx q = z2 * M(0, 1) / 4.0;
  return I * (BM - C) - I * q * C + I * M(1, 1) * C * C / 2.0;
}

cplx full_amplitude_prefactor(double z) {
  const BeamFrame f = beam_matrix(z);
  return std::sqrt(2.0 * pi / (-I * f.M(1, 1))) * f.a;
}

}  // namespace graze
