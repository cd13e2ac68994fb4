#pragma once

// Independent numerical oracles: fixed-step ODE integration of the ray and
// variational systems, finite-difference derivatives, and slope fits. These
// never call the closed forms they are used to check.

#include <array>
#include <cmath>
#include <vector>

#include "graze/ray_beam.hpp"

namespace graze::oracle {

// Classical RK4 from s0 to s1 with (at most) step h.
template <std::size_t N, class F>
std::array<cplx, N> rk4(F&& rhs, std::array<cplx, N> y, double s0, double s1, double h) {
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(s1 - s0) / h)));
  const double dt = (s1 - s0) / steps;
  auto axpy = [](const std::array<cplx, N>& a, double c, const std::array<cplx, N>& b) {
    std::array<cplx, N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + c * b[i];
    return r;
  };
  double s = s0;
  for (int i = 0; i < steps; ++i) {
    const auto k1 = rhs(s, y);
    const auto k2 = rhs(s + 0.5 * dt, axpy(y, 0.5 * dt, k1));
    const auto k3 = rhs(s + 0.5 * dt, axpy(y, 0.5 * dt, k2));
    const auto k4 = rhs(s + dt, axpy(y, dt, k3));
    for (std::size_t j = 0; j < N; ++j) y[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    s = (i + 1 == steps) ? s1 : s + dt;
  }
  return y;
}

// The bicharacteristic system with eta = 1 integrated from y = 0.
PhasePoint flow_ode(const RayParams& p0, double y, double h = 1e-3);

// Variations of the ray system along the central ray with data (1,0,i,0) and
// (0,1,0,i), integrated from y = 0.
VariationalPair variational_ode(double y, double h = 1e-3);

// Centered difference of order n (1..4), fourth order in h, then one
// Richardson step with h/2.
template <class F>
auto derivative(F&& f, double x, int n, double h) {
  auto stencil = [&](double s) {
    switch (n) {
      case 1:
        return (-f(x + 2 * s) + 8.0 * f(x + s) - 8.0 * f(x - s) + f(x - 2 * s)) / (12.0 * s);
      case 2:
        return (-f(x + 2 * s) + 16.0 * f(x + s) - 30.0 * f(x) + 16.0 * f(x - s) - f(x - 2 * s)) /
               (12.0 * s * s);
      case 3:
        return (-f(x + 3 * s) + 8.0 * f(x + 2 * s) - 13.0 * f(x + s) + 13.0 * f(x - s) -
                8.0 * f(x - 2 * s) + f(x - 3 * s)) /
               (8.0 * s * s * s);
      default:
        return (-f(x + 3 * s) + 12.0 * f(x + 2 * s) - 39.0 * f(x + s) + 56.0 * f(x) -
                39.0 * f(x - s) + 12.0 * f(x - 2 * s) - f(x - 3 * s)) /
               (6.0 * s * s * s * s);
    }
  };
  const auto coarse = stencil(h);
  const auto fine = stencil(0.5 * h);
  return (16.0 * fine - coarse) / 15.0;
}

// Least-squares slope of log y against log x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

std::vector<double> logspace(double lo, double hi, int n);

}  // namespace graze::oracle
