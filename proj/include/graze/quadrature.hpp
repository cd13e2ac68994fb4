#pragma once

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "graze/common.hpp"

namespace graze {

struct QuadratureResult {
  cplx value{};
  double error_estimate = 0.0;  // absolute
  double truncation_radius = 0.0;
  int panel_count = 0;
  bool converged = true;
};

// |f(u)| <= envelope * exp(-coefficient * |u - center|^power)
struct Damping {
  double coefficient = 0.0;
  double power = 2.0;
  double center = 0.0;
  double envelope = 1.0;
};

struct IntegrandSpec {
  std::function<cplx(double)> evaluator;
  Damping damping;
  double oscillation_scale = 0.0;  // radians per unit length near the peak
};

struct NdIntegrandSpec {
  std::function<cplx(std::span<const double>)> evaluator;
  std::vector<Damping> damping;  // one per axis, outermost first
  double oscillation_scale = 0.0;
};

// Integrand along a ray from the origin: f is evaluated at r e^{i angle}.
struct RayIntegrandSpec {
  std::function<cplx(cplx)> evaluator;
  Damping damping;  // decay in r along the ray; center ignored
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_panels = 20000;
  int initial_panels = 8;
  Exec exec = Exec::serial;
};

// Thrown when the panel budget runs out; carries the best estimate.
struct NonConvergenceError : NumericalError {
  QuadratureResult best;
  NonConvergenceError(const std::string& what, QuadratureResult r)
      : NumericalError(what), best(r) {}
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0, b = 0.0;
  cplx kronrod{};
  double err = 0.0;
  double abs_mass = 0.0;
};

inline double node(const Panel& p, int j) {
  const double c = 0.5 * (p.a + p.b), h = 0.5 * (p.b - p.a);
  if (j < 7) return c - h * xgk[j];
  if (j == 7) return c;
  return c + h * xgk[14 - j];
}

inline void reduce(Panel& p, const cplx* f) {
  const double h = 0.5 * (p.b - p.a);
  cplx k = wgk[7] * f[7];
  cplx g = wg[3] * f[7];
  double am = wgk[7] * std::abs(f[7]);
  for (int j = 0; j < 7; ++j) {
    const cplx s = f[j] + f[14 - j];
    k += wgk[j] * s;
    am += wgk[j] * (std::abs(f[j]) + std::abs(f[14 - j]));
    if (j % 2 == 1) g += wg[j / 2] * s;
  }
  p.kronrod = h * k;
  p.err = std::abs(h * (k - g));
  p.abs_mass = std::abs(h) * am;
}

// Evaluates all 15 nodes of panels [first, end) into a flat buffer, possibly
// concurrently, then reduces each panel. Each panel's reduction only reads its
// own slots, so the outcome does not depend on the schedule.
template <class F>
void evaluate(F& f, std::vector<Panel>& ps, std::size_t first, Exec exec) {
  const std::size_t n = ps.size() - first;
  std::vector<cplx> buf(n * 15);
  std::exception_ptr failure;
  const long long total = static_cast<long long>(n * 15);
#pragma omp parallel for schedule(static) if (exec == Exec::parallel && total > 30)
  for (long long idx = 0; idx < total; ++idx) {
    try {
      buf[idx] = f(node(ps[first + idx / 15], static_cast<int>(idx % 15)));
    } catch (...) {
#pragma omp critical(graze_quad_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < n; ++i) reduce(ps[first + i], &buf[i * 15]);
}

}  // namespace detail

// Adaptive G7K15 on [a, b] with the given interior breakpoints. Each round
// splits every panel whose error exceeds its length share of the target, and
// evaluates the new panels as one batch. Summation runs in left-to-right panel
// order so the value is independent of concurrency.
template <class F>
QuadratureResult integrate_interval(F&& f, double a, double b, const QuadOptions& opt,
                                    std::span<const double> breaks = {}) {
  using detail::Panel;
  std::vector<double> cuts{a};
  for (double c : breaks)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  const double length = b - a;
  std::vector<Panel> ps;
  const int per = std::max(1, opt.initial_panels / static_cast<int>(cuts.size() - 1));
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const double w = (cuts[s + 1] - cuts[s]) / per;
    for (int i = 0; i < per; ++i) {
      Panel p;
      p.a = cuts[s] + i * w;
      p.b = (i + 1 == per) ? cuts[s + 1] : cuts[s] + (i + 1) * w;
      ps.push_back(p);
    }
  }
  detail::evaluate(f, ps, 0, opt.exec);

  QuadratureResult res;
  while (true) {
    cplx sum{};
    double err = 0.0, mass = 0.0;
    for (const Panel& p : ps) {
      sum += p.kronrod;
      err += p.err;
      mass += p.abs_mass;
    }
    // a request below the rounding floor of the sum cannot be met
    const double target = std::max(opt.abs_tol + opt.rel_tol * std::abs(sum), 50.0 * 2.2e-16 * mass);
    res.value = sum;
    res.error_estimate = err;
    res.panel_count = static_cast<int>(ps.size());
    if (err <= target) {
      res.converged = true;
      break;
    }
    std::vector<std::size_t> split;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (ps[i].err > target * (ps[i].b - ps[i].a) / length) split.push_back(i);
    const std::size_t room = ps.size() < static_cast<std::size_t>(opt.max_panels)
                                 ? opt.max_panels - ps.size()
                                 : 0;
    if (room == 0 || split.empty()) {
      res.converged = false;
      break;
    }
    if (split.size() > room) {
      std::stable_sort(split.begin(), split.end(),
                       [&](std::size_t i, std::size_t j) { return ps[i].err > ps[j].err; });
      split.resize(room);
      std::sort(split.begin(), split.end());
    }
    std::vector<Panel> next;
    next.reserve(ps.size() + split.size());
    std::vector<Panel> fresh;
    std::size_t cursor = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (cursor < split.size() && split[cursor] == i) {
        ++cursor;
        const double mid = 0.5 * (ps[i].a + ps[i].b);
        fresh.push_back(Panel{ps[i].a, mid});
        fresh.push_back(Panel{mid, ps[i].b});
      }
    }
    detail::evaluate(f, fresh, 0, opt.exec);
    cursor = 0;
    std::size_t k = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (cursor < split.size() && split[cursor] == i) {
        ++cursor;
        next.push_back(fresh[k++]);
        next.push_back(fresh[k++]);
      } else {
        next.push_back(ps[i]);
      }
    }
    ps.swap(next);
  }
  return res;
}

// Smallest R with 2 exp(-a R^p) / (p a R^{p-1}) <= tail_tol, an upper bound for
// the two-sided tail integral of exp(-a |u|^p) beyond R.
double truncation_radius(double damping_coefficient, double power, double tail_tol);

// Integral over the real line of a damped integrand. The tail beyond the
// truncation radius is bounded by tol / 10; the value is accurate to
// tol (1 + |value|). Throws NonConvergenceError when the panel budget runs out.
QuadratureResult integrate_1d(const IntegrandSpec& spec, double tol, Exec exec = Exec::serial,
                              int max_panels = 20000);

// Nested integrate_1d over 2 or 3 axes. Inner integrals are requested at
// tol / 4 relative plus an absolute share of tol / (4 L) where L is the outer
// truncated length; the reported error adds the outer estimate and L times the
// largest inner estimate. Only the outermost axis evaluates concurrently.
QuadratureResult integrate_nd(const NdIntegrandSpec& spec, int dims, double tol,
                              Exec exec = Exec::serial);

// Integral of f(r e^{i angle}) e^{i angle} dr over r in [0, inf). Throws
// ContourError when the samples near the truncation radius exceed the
// declared damping.
QuadratureResult rotated_ray_integral(const RayIntegrandSpec& spec, double ray_angle, double tol,
                                      Exec exec = Exec::serial);

// Integral along the path that comes in along the ray at `left_angle` and
// leaves along the ray at `right_angle`: ray(right) - ray(left).
QuadratureResult rotated_line_integral(const RayIntegrandSpec& spec, double right_angle,
                                       double left_angle, double tol, Exec exec = Exec::serial);

// Integral of f(u + i shift) du over the real line, damping taken in u. For
// analytic integrands this moves the contour past cancellation that the real
// line would suffer (e.g. Fourier transforms of Gaussians at large frequency).
QuadratureResult shifted_line_integral(const RayIntegrandSpec& spec, double shift, double tol,
                                       Exec exec = Exec::serial);

}  // namespace graze
