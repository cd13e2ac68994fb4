#pragma once

#include <Eigen/Dense>

#include "graze/common.hpp"

namespace graze {

using Mat2 = Eigen::Matrix2cd;

// A point in phase space for the symbol (xi^2 + eta^2 - (1+x) tau^2) / 2.
struct PhasePoint {
  double x = 0, y = 0, t = 0, xi = 0, eta = 0, tau = 0;
};

// Initial data for the flow with eta = 1, parametrized by y.
struct RayParams {
  double x0 = 0, t0 = 0, xi0 = 0, tau0 = 0;
};

struct BeamFrame {
  Mat2 V, W, M;
  cplx D;  // det V
  cplx a;  // D^{-1/2}, a(0) = 1
};

struct VariationalPair {
  Mat2 V, W;
};

struct ProjectedPoint {
  double x = 0, t = 0;
};

struct PhaseDerivatives {
  cplx psi, psi_x, psi_y, psi_t;
};

struct PhaseHessianOnRay {
  cplx psi_xx, psi_xt, psi_tt, psi_yy;
};

// (y^2/4, y, y + y^3/12, y/2, 1, -1)
PhasePoint central_ray(double y);

double hamiltonian(const PhasePoint& p);

PhasePoint flow_general(const RayParams& p0, double y);

// Projection to (x, t) of the null ray through the origin with direction ratios
// (xi0/tau, eta/tau), using `span` as curve parameter.
ProjectedPoint projected_ray(double xi0_over_tau, double eta_over_tau, double span);

// Closed-form solutions of the variational system along the central ray.
VariationalPair variational_matrices(double y);

BeamFrame beam_matrix(double y);

cplx beam_phase(double x, double y, double t);

// psi and its first derivatives, differentiated exactly.
PhaseDerivatives beam_phase_derivatives(double x, double y, double t);

// psi_y - ((1+x) psi_t^2 - psi_x^2)^{1/2}, root equal to +1 on the ray.
cplx eikonal_residual(double x, double y, double t);

// psi_y - ((1+x) psi_t^2 - psi_x^2 + 1) / 2: the equation that M solves to
// second order.
cplx paraxial_eikonal_residual(double x, double y, double t);

// Second derivatives of psi on the central ray.
PhaseHessianOnRay phase_hessian_on_ray(double y);

// da/dy for a = D^{-1/2}.
cplx amplitude_derivative(double y);

// a' + (1/2)((1+x) psi_tt - psi_xx - psi_yy) a on the ray.
cplx transport_residual(double y);

// a' + (1/2)(psi_xx - (1+x) psi_tt) a on the ray, i.e. a' + tr(V' V^{-1}) a / 2.
cplx paraxial_transport_residual(double y);

// (eta_xi)_x + (eta_tau)_t on the ray with eta = ((1+x) tau^2 - xi^2)^{1/2},
// xi = psi_x, tau = psi_t.
cplx trace_identity_lhs(double y);

// d/dy log det V = D'/D.
cplx log_det_v_derivative(double y);

cplx beam_field(double x, double y, double t, double k);

// (1 + 4x + 2i x^{3/2})^{-1/2}
cplx beam_on_ray(double x);

}  // namespace graze
