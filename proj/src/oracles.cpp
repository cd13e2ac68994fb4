#include "graze/oracles.hpp"

namespace graze::oracle {

PhasePoint flow_ode(const RayParams& p0, double y, double h) {
  // state (x, t, xi, tau)
  auto rhs = [](double, const std::array<cplx, 4>& s) {
    return std::array<cplx, 4>{s[2], -(1.0 + s[0]) * s[3], 0.5 * s[3] * s[3], 0.0};
  };
  const auto s = rk4<4>(rhs, {p0.x0, p0.t0, p0.xi0, p0.tau0}, 0.0, y, h);
  return {s[0].real(), y, s[1].real(), s[2].real(), 1.0, s[3].real()};
}

VariationalPair variational_ode(double y, double h) {
  // linearization about (x, t, xi, tau) = (s^2/4, ., s/2, -1)
  auto rhs = [](double s, const std::array<cplx, 4>& v) {
    const double x = 0.25 * s * s, tau = -1.0;
    return std::array<cplx, 4>{v[2], -tau * v[0] - (1.0 + x) * v[3], tau * v[3], 0.0};
  };
  const auto c1 = rk4<4>(rhs, {1.0, 0.0, I, 0.0}, 0.0, y, h);
  const auto c2 = rk4<4>(rhs, {0.0, 1.0, 0.0, I}, 0.0, y, h);
  VariationalPair p;
  p.V << c1[0], c2[0], c1[1], c2[1];
  p.W << c1[2], c2[2], c1[3], c2[3];
  return p;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> logspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo * std::pow(hi / lo, n == 1 ? 0.0 : double(i) / (n - 1));
  return v;
}

}  // namespace graze::oracle
