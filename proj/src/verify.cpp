#include "graze/verify.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "graze/airy.hpp"
#include "graze/grazing.hpp"
#include "graze/oracles.hpp"
#include "graze/ray_beam.hpp"
#include "graze/spectral.hpp"
#include "graze/stationary.hpp"

namespace graze {

void VerificationReport::push(Check c) {
  overall = overall && c.pass;
  checks.push_back(std::move(c));
}

void VerificationReport::near(std::string name, double expected, double actual, double tolerance,
                              std::string detail) {
  push({std::move(name), expected, actual, tolerance, std::abs(actual - expected) <= tolerance,
        std::move(detail), CheckKind::near});
}

void VerificationReport::at_most(std::string name, double bound, double actual, std::string detail) {
  push({std::move(name), bound, actual, 0.0, actual <= bound, std::move(detail), CheckKind::at_most});
}

void VerificationReport::at_least(std::string name, double bound, double actual, std::string detail) {
  push({std::move(name), bound, actual, 0.0, actual >= bound, std::move(detail), CheckKind::at_least});
}

namespace {

std::string at_x(double x) { return "x=" + fmt_num(x); }
std::string at_y(double y) { return "y=" + fmt_num(y); }

double max_abs(const Mat2& a) { return a.cwiseAbs().maxCoeff(); }

double ray_t(double x) { return 2.0 * std::sqrt(x) + 2.0 / 3.0 * x * std::sqrt(x); }

// Halton points in the disk |z| <= radius
std::vector<cplx> disk_points(int n, double radius) {
  auto halton = [](int i, int base) {
    double f = 1.0, r = 0.0;
    for (; i > 0; i /= base) {
      f /= base;
      r += f * (i % base);
    }
    return r;
  };
  std::vector<cplx> pts;
  for (int i = 1; i <= n; ++i) pts.push_back(std::polar(radius * std::sqrt(halton(i, 2)), 2.0 * pi * halton(i, 3)));
  return pts;
}

}  // namespace

VerificationReport verify_airy() {
  VerificationReport rep;
  rep.suite = "airy";
  const cplx w0 = (omega - 1.0) / (2.0 * pi * std::sqrt(3.0));

  double worst = 0.0;
  for (cplx z : disk_points(100, 8.0)) worst = std::max(worst, std::abs(wronskian(z) - w0));
  rep.at_most("wronskian_constancy", 1e-9, worst, "max |W(z) - W(0)| over 100 points in |z| <= 8");
  rep.near("wronskian_zero", 0.0, std::abs(wronskian_zero() - w0), 1e-14, "closed form vs (omega - 1)/(2 pi sqrt 3)");

  const AiryValue a0 = airy_ai(0.0);
  rep.near("ai_0", 0.355028053887817, a0.value.real(), 1e-14, "Ai(0)");
  rep.near("ai_prime_0", -0.258819403792807, a0.derivative.real(), 1e-14, "Ai'(0)");
  rep.near("ratio_0", -0.729011132947, airy_ratio(0.0).real(), 1e-11, "Ai'(0)/Ai(0)");

  double scaled = 0.0;
  for (double z = 10.0; z <= 40.0; z += 1.0) {
    const double rel = std::abs(airy_asymptotic(z, 0) / airy_ai(z).value - 1.0);
    scaled = std::max(scaled, rel * std::pow(z, 1.5));
  }
  rep.at_most("asymptotic_sector", 1.0, scaled, "max relerr * z^{3/2} for real z in [10, 40]");

  double conn = 0.0;
  for (double re = -5.0; re <= 5.0; re += 0.5)
    for (double im = -5.0; im <= 5.0; im += 0.5) {
      const cplx z(re, im);
      if (std::abs(z) > 5.0) continue;
      conn = std::max(conn, std::abs(airy_ai(z).value + omega * airy_ai(omega * z).value +
                                     omega * omega * airy_ai(omega * omega * z).value));
    }
  rep.at_most("connection_identity", 1e-9, conn, "Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) on |z| <= 5");

  const cplx z9 = 9.0 * std::polar(1.0, -pi / 3.0);
  const AiryValue v9 = airy_ai(z9);
  rep.near("ratio_crossover", 0.0, std::abs(airy_ratio(z9) / (v9.derivative / v9.value) - 1.0), 1e-3,
           "asymptotic vs direct ratio at 9 e^{-i pi/3}");
  return rep;
}

VerificationReport verify_beam() {
  VerificationReport rep;
  rep.suite = "beam";
  double null_res = 0.0;
  for (double y = -5.0; y <= 5.0; y += 0.25) null_res = std::max(null_res, std::abs(hamiltonian(central_ray(y))));
  rep.at_most("central_ray_null", 1e-12, null_res, "y in [-5, 5]");

  const RayParams p0{0.1, 0.0, 0.6, -std::sqrt(1.36 / 1.1)};
  const double h0 = hamiltonian(flow_general(p0, 0.0));
  double drift = 0.0;
  for (double y = -3.0; y <= 3.0; y += 0.25) drift = std::max(drift, std::abs(hamiltonian(flow_general(p0, y)) - h0));
  rep.at_most("hamiltonian_conservation", 1e-10, drift, "null data, y in [-3, 3]");

  double asym = 0.0, min_eig = 1e300, det_res = 0.0;
  for (double y = -5.0; y <= 5.0; y += 0.25) {
    const BeamFrame f = beam_matrix(y);
    asym = std::max(asym, std::abs(f.M(0, 1) - f.M(1, 0)));
    const Eigen::Matrix2d im = f.M.imag();
    min_eig = std::min(min_eig, Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(0.5 * (im + im.transpose()))
                                    .eigenvalues()
                                    .minCoeff());
    det_res = std::max(det_res, std::abs(f.a * f.a * f.D - 1.0));
  }
  rep.at_most("m_symmetry", 1e-12, asym, "y in [-5, 5]");
  rep.at_least("im_m_min_eigenvalue", 1e-300, min_eig, "y in [-5, 5]");
  rep.at_most("amplitude_branch", 1e-12, det_res, "|a^2 D - 1| on y in [-5, 5]");

  rep.near("beam_on_ray_modulus", std::pow(29.0, -0.25), std::abs(beam_on_ray(1.0)), 1e-12, at_x(1));
  const double x = 0.49;
  rep.near("beam_on_ray_vs_field", 0.0,
           std::abs(beam_on_ray(x) - beam_field(x, 2 * std::sqrt(x), ray_t(x), 50.0)), 1e-12, at_x(x));
  rep.near("eikonal_on_ray", 0.0, std::abs(eikonal_residual(1.0, 2.0, 8.0 / 3.0)), 1e-12, at_y(2));
  rep.near("psi_y_on_ray", 1.0, beam_phase_derivatives(1.0, 2.0, 8.0 / 3.0).psi_y.real(), 1e-12, at_y(2));
  return rep;
}

VerificationReport verify_appendix1() {
  VerificationReport rep;
  rep.suite = "appendix1";
  double dv = 0.0, dw = 0.0, dm = 0.0;
  for (double y = -3.0; y <= 3.0; y += 0.5) {
    const VariationalPair closed = variational_matrices(y);
    const VariationalPair ode = oracle::variational_ode(y);
    dv = std::max(dv, max_abs(closed.V - ode.V));
    dw = std::max(dw, max_abs(closed.W - ode.W));
    dm = std::max(dm, max_abs(beam_matrix(y).M - ode.W * ode.V.inverse()));
  }
  rep.at_most("v_vs_ode", 1e-8, dv, "y in [-3, 3], RK4 step 1e-3");
  rep.at_most("w_vs_ode", 1e-8, dw, "y in [-3, 3], RK4 step 1e-3");
  rep.at_most("m_vs_ode", 1e-8, dm, "y in [-3, 3], RK4 step 1e-3");
  rep.near("m_at_0", 0.0, max_abs(beam_matrix(0.0).M - I * Mat2::Identity()), 0.0, "M(0) = iI");

  double tr = 0.0, ptr = 0.0;
  for (double y = -3.0; y <= 3.0; y += 0.5) {
    tr = std::max(tr, std::abs(transport_residual(y)));
    ptr = std::max(ptr, std::abs(paraxial_transport_residual(y)));
  }
  rep.at_most("transport_residual", 1e-8, tr, "a' + ((1+x) psi_tt - psi_xx - psi_yy) a / 2, y in [-3, 3]");
  rep.at_most("paraxial_transport_residual", 1e-8, ptr, "a' + (psi_xx - (1+x) psi_tt) a / 2, y in [-3, 3]");
  rep.near("trace_identity", 0.0, std::abs(trace_identity_lhs(1.0) - log_det_v_derivative(1.0)), 1e-8, at_y(1));
  return rep;
}

VerificationReport verify_appendix2() {
  VerificationReport rep;
  rep.suite = "appendix2";
  for (double x : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double y = 2.0 * std::sqrt(x), sx = std::sqrt(x);
    const double z0 = 0.0;
    auto r = [&](double z) { return root_r(x, y, z); };
    auto phi = [&](double z) { return phi_reduced(x, y, z); };
    const std::string d = at_x(x);
    rep.near("r_z", 0.0, oracle::derivative(r, z0, 1, 1e-2), 1e-5, d);
    rep.near("r_zz", 0.25, oracle::derivative(r, z0, 2, 1e-2), 1e-5, d);
    rep.near("r_zzz", 0.375 * (1.0 / sx - sx), oracle::derivative(r, z0, 3, 2e-2), 1e-5, d);
    rep.near("r_zzzz", 15.0 / 16.0 * (x - 1.0 + 1.0 / x), oracle::derivative(r, z0, 4, 3e-2), 1e-5, d);
    rep.near("phi_zzz", -0.25, oracle::derivative(phi, z0, 3, 2e-2), 1e-4, d);
    rep.near("phi_zzzz", 0.375 * (sx - 1.0 / sx), oracle::derivative(phi, z0, 4, 3e-2), 1e-4, d);
    const double t = ray_t(x);
    auto bmc = [&](double z) { return B_of_z(z) - C_of(x, y, z, t); };
    const cplx d4 = oracle::derivative(bmc, z0, 4, 3e-2);
    rep.near("quartic_coeff", 0.0, std::abs(d4 - 24.0 * quartic_coefficient(x)), 1e-3, d);
  }
  return rep;
}

VerificationReport verify_appendix3() {
  VerificationReport rep;
  rep.suite = "appendix3";
  const double x = 1.0, y = 2.0, t = ray_t(x);
  const std::vector<double> zs = oracle::logspace(1e-2, 0.3, 12);
  std::vector<double> de, da;
  for (double z : zs) {
    de.push_back(std::abs(descended_exponent_full(x, y, z, t) - descended_exponent_frozen(x, y, z, t)));
    da.push_back(std::abs(full_amplitude_prefactor(z) / std::sqrt(2.0 * pi) - 1.0));
  }
  rep.at_least("exponent_difference_slope", 4.8, oracle::loglog_slope(zs, de), "z in [1e-2, 0.3] on the ray, x=1");
  rep.at_least("amplitude_prefactor_slope", 0.9, oracle::loglog_slope(zs, da), "z in [1e-2, 0.3]");
  rep.near("rho_at_0", 0.0, std::abs(rho_full(0.0, 0.3, -1.2) - rho_frozen(0.0, 0.3, -1.2)), 1e-15,
           "M(0) = iI");
  return rep;
}

VerificationReport verify_closedform() {
  VerificationReport rep;
  rep.suite = "closedform";
  for (double x : {0.3, 1.0, 2.0}) rep.near("display_identity", 0.0, closed_form_identity_check(x), 1e-12, at_x(x));
  double lim = 0.0, mod = 0.0;
  for (double x : oracle::logspace(0.05, 5.0, 25)) {
    lim = std::max(lim, std::abs(limit_integral(x) - w_on_ray_closed(x)));
    mod = std::max(mod, std::abs(std::abs(w_on_ray_closed(x)) - 0.5 / std::sqrt(1.0 + x)));
  }
  rep.at_most("limit_integral", 1e-10, lim, "log grid x in [0.05, 5]");
  rep.at_most("modulus_law", 1e-12, mod, "log grid x in [0.05, 5]");
  rep.near("closed_at_1", 0.0, std::abs(w_on_ray_closed(1.0) - cplx(0.25, -0.25)), 1e-15, at_x(1));
  rep.near("abs_c", std::pow(4.0 * pi, -1.5) * 2.0 * pi, std::abs(constant_c()), 1e-12);
  rep.near("quartic_moment_1", std::sqrt(pi) / 4.0, quartic_moment(1.0).real(), 1e-14);
  rep.near("quartic_moment_32", std::sqrt(2.0 * pi), std::abs(quartic_moment(-I * quartic_coefficient(1.0))), 1e-12);
  const double xs = 1e-4;
  rep.near("reflected_ratio", 0.5, std::abs(reflected_amplitude(xs)) / std::abs(beam_on_ray(xs)), 0.05, at_x(xs));
  return rep;
}

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names{"airy", "beam", "appendix1", "appendix2", "appendix3", "closedform"};
  return names;
}

VerificationReport run_verification(const std::string& suite) {
  static const std::map<std::string, std::function<VerificationReport()>> table{
      {"airy", verify_airy},           {"beam", verify_beam},           {"appendix1", verify_appendix1},
      {"appendix2", verify_appendix2}, {"appendix3", verify_appendix3}, {"closedform", verify_closedform}};
  const auto it = table.find(suite);
  if (it == table.end()) throw DomainError("unknown verification suite '" + suite + "'");
  return it->second();
}

}  // namespace graze
