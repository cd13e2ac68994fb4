#include "graze/ray_beam.hpp"

#include <cmath>

namespace graze {

namespace {

// dV/dy and dW/dy of the closed forms
Mat2 v_prime(double y) {
  Mat2 m;
  m << cplx(0, 1), cplx(0, -y), cplx(1, y), cplx(0, -1.0 - 0.75 * y * y);
  return m;
}

Mat2 w_prime() {
  Mat2 m;
  m << 0.0, cplx(0, -1), 0.0, 0.0;
  return m;
}

cplx det_v(double y) { return cplx(1.0 + y * y, 0.25 * y * y * y); }

cplx det_v_prime(double y) { return cplx(2.0 * y, 0.75 * y * y); }

}  // namespace

PhasePoint central_ray(double y) { return {0.25 * y * y, y, y + y * y * y / 12.0, 0.5 * y, 1.0, -1.0}; }

double hamiltonian(const PhasePoint& p) {
  return 0.5 * (p.xi * p.xi + p.eta * p.eta - (1.0 + p.x) * p.tau * p.tau);
}

PhasePoint flow_general(const RayParams& p, double y) {
  const double tt = p.tau0 * p.tau0;
  PhasePoint q;
  q.x = p.x0 + p.xi0 * y + tt * y * y / 4.0;
  q.y = y;
  q.t = p.t0 - p.tau0 * ((1.0 + p.x0) * y + p.xi0 * y * y / 2.0 + tt * y * y * y / 12.0);
  q.xi = p.xi0 + tt * y / 2.0;
  q.eta = 1.0;
  q.tau = p.tau0;
  return q;
}

ProjectedPoint projected_ray(double a, double b, double s) {
  if (std::abs(a * a + b * b - 1.0) > 1e-12)
    throw DomainError("projected_ray: ratios must satisfy (xi0/tau)^2 + (eta/tau)^2 = 1");
  if (b == 0.0) throw DegeneracyError("projected_ray: eta/tau = 0");
  // xi0/eta = a/b, tau/eta = 1/b
  const double ib = 1.0 / b;
  return {a * ib * s + ib * ib * s * s / 4.0,
          -ib * s - a * ib * ib * s * s / 2.0 - ib * ib * ib * s * s * s / 12.0};
}

VariationalPair variational_matrices(double y) {
  VariationalPair p;
  p.V << cplx(1, y), cplx(0, -y * y / 2.0), cplx(y, y * y / 2.0), cplx(1, -y - y * y * y / 4.0);
  p.W << cplx(0, 1), cplx(0, -y), 0.0, cplx(0, 1);
  return p;
}

BeamFrame beam_matrix(double y) {
  const VariationalPair vw = variational_matrices(y);
  BeamFrame f;
  f.V = vw.V;
  f.W = vw.W;
  f.D = det_v(y);
  Mat2 m;
  m << cplx(1.0 + y * y, -y + y * y * y / 4.0), cplx(-y, -y * y / 2.0), cplx(-y, -y * y / 2.0),
      cplx(1.0, y);
  f.M = (I / f.D) * m;
  // Re D = 1 + y^2 > 0, so the principal root is continuous in y with a(0) = 1
  f.a = 1.0 / std::sqrt(f.D);
  return f;
}

cplx beam_phase(double x, double y, double t) { return beam_phase_derivatives(x, y, t).psi; }

PhaseDerivatives beam_phase_derivatives(double x, double y, double t) {
  const PhasePoint g = central_ray(y);
  const BeamFrame f = beam_matrix(y);
  const Eigen::Vector2cd d(x - g.x, t - g.t);
  const Eigen::Vector2cd md = f.M * d;
  const Eigen::Vector2cd dp(-0.5 * y, -(1.0 + y * y / 4.0));
  const Mat2 vinv = f.V.inverse();
  const Mat2 mp = (w_prime() - f.M * v_prime(y)) * vinv;
  PhaseDerivatives r;
  r.psi = d(0) * g.xi + d(1) * g.tau + 0.5 * (d.transpose() * md)(0);
  r.psi_x = g.xi + md(0);
  r.psi_t = g.tau + md(1);
  r.psi_y = dp(0) * g.xi + d(0) * 0.5 + dp(1) * g.tau + (dp.transpose() * md)(0) +
            0.5 * (d.transpose() * mp * d)(0);
  return r;
}

cplx eikonal_residual(double x, double y, double t) {
  const PhaseDerivatives p = beam_phase_derivatives(x, y, t);
  const cplx e = (1.0 + x) * p.psi_t * p.psi_t - p.psi_x * p.psi_x;
  if (e.real() <= 0.0 && std::abs(e.imag()) <= 1e-12 * std::abs(e))
    throw BranchError("eikonal_residual: (1+x) psi_t^2 - psi_x^2 lies on the negative real axis");
  return p.psi_y - std::sqrt(e);
}

cplx paraxial_eikonal_residual(double x, double y, double t) {
  const PhaseDerivatives p = beam_phase_derivatives(x, y, t);
  return p.psi_y - 0.5 * ((1.0 + x) * p.psi_t * p.psi_t - p.psi_x * p.psi_x + 1.0);
}

PhaseHessianOnRay phase_hessian_on_ray(double y) {
  const BeamFrame f = beam_matrix(y);
  const Eigen::Vector2cd dp(-0.5 * y, -(1.0 + y * y / 4.0));
  PhaseHessianOnRay h;
  h.psi_xx = f.M(0, 0);
  h.psi_xt = f.M(0, 1);
  h.psi_tt = f.M(1, 1);
  // d/dy of psi_y at zero displacement: -x'' xi - 2 x' xi' - t'' tau + d'^T M d'
  h.psi_yy = -0.25 * y + (dp.transpose() * f.M * dp)(0);
  return h;
}

cplx amplitude_derivative(double y) {
  const cplx D = det_v(y);
  return -0.5 * det_v_prime(y) / D / std::sqrt(D);
}

cplx transport_residual(double y) {
  const PhaseHessianOnRay h = phase_hessian_on_ray(y);
  const double x = 0.25 * y * y;
  const cplx a = beam_matrix(y).a;
  return amplitude_derivative(y) + 0.5 * ((1.0 + x) * h.psi_tt - h.psi_xx - h.psi_yy) * a;
}

cplx paraxial_transport_residual(double y) {
  const BeamFrame f = beam_matrix(y);
  const double x = 0.25 * y * y;
  return amplitude_derivative(y) + 0.5 * (f.M(0, 0) - (1.0 + x) * f.M(1, 1)) * f.a;
}

cplx trace_identity_lhs(double y) {
  const BeamFrame f = beam_matrix(y);
  const double x = 0.25 * y * y;
  const double px = 0.5 * y, pt = -1.0;  // psi_x, psi_t on the ray
  const cplx pxx = f.M(0, 0), pxt = f.M(0, 1), ptt = f.M(1, 1);
  const double eta = std::sqrt((1.0 + x) * pt * pt - px * px);
  const cplx eta_x = (pt * pt + 2.0 * (1.0 + x) * pt * pxt - 2.0 * px * pxx) / (2.0 * eta);
  const cplx eta_t = (2.0 * (1.0 + x) * pt * ptt - 2.0 * px * pxt) / (2.0 * eta);
  const cplx dx_term = -pxx / eta + px * eta_x / (eta * eta);
  const cplx dt_term = (1.0 + x) * ptt / eta - (1.0 + x) * pt * eta_t / (eta * eta);
  return dx_term + dt_term;
}

cplx log_det_v_derivative(double y) { return det_v_prime(y) / det_v(y); }

cplx beam_field(double x, double y, double t, double k) {
  if (!(k > 0.0)) throw DomainError("beam_field: k must be positive");
  return beam_matrix(y).a * std::exp(I * k * beam_phase(x, y, t));
}

cplx beam_on_ray(double x) {
  if (!(x >= 0.0)) throw DomainError("beam_on_ray: x must be >= 0");
  return 1.0 / std::sqrt(cplx(1.0 + 4.0 * x, 2.0 * x * std::sqrt(x)));
}

}  // namespace graze
