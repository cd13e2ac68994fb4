#include "graze/quadrature.hpp"

#include <array>
#include <atomic>
#include <cmath>

namespace graze {

namespace {

double tail_bound(double a, double p, double r) {
  return 2.0 * std::exp(-a * std::pow(r, p)) / (p * a * std::pow(r, p - 1.0));
}

// integral of exp(-a |u|^p) over the line
double full_mass(double a, double p) { return 2.0 * std::tgamma(1.0 + 1.0 / p) * std::pow(a, -1.0 / p); }

void check_damping(const Damping& d, const char* who) {
  if (!(d.coefficient > 0.0) || !(d.power >= 1.0) || !(d.envelope > 0.0))
    throw DomainError(std::string(who) + ": damping coefficient and envelope must be positive, power >= 1");
}

void atomic_max(std::atomic<double>& slot, double v) {
  double cur = slot.load();
  while (v > cur && !slot.compare_exchange_weak(cur, v)) {
  }
}

int initial_panels(double length, double oscillation_scale, int max_panels) {
  int n = 8;
  if (oscillation_scale > 0.0) {
    // 15 nodes per panel; at least 6 nodes per period
    const double period = 2.0 * pi / oscillation_scale;
    n = std::max(n, static_cast<int>(std::ceil(length / (2.5 * period))));
  }
  return std::min(n, std::max(1, max_panels / 4));
}

}  // namespace

double truncation_radius(double a, double p, double tail_tol) {
  if (!(a > 0.0)) throw DomainError("truncation_radius: damping coefficient must be positive");
  if (!(p >= 1.0)) throw DomainError("truncation_radius: power must be >= 1");
  if (!(tail_tol > 0.0)) throw DomainError("truncation_radius: tail tolerance must be positive");
  if (p == 1.0 && 2.0 / a <= tail_tol) return 0.0;
  double lo = 0.0, hi = std::pow(1.0 / a, 1.0 / p);
  while (tail_bound(a, p, hi) > tail_tol) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (tail_bound(a, p, mid) > tail_tol ? lo : hi) = mid;
  }
  return hi;
}

QuadratureResult integrate_1d(const IntegrandSpec& spec, double tol, Exec exec, int max_panels) {
  check_damping(spec.damping, "integrate_1d");
  if (!(tol > 0.0)) throw DomainError("integrate_1d: tol must be positive");
  const Damping& d = spec.damping;
  const double R = truncation_radius(d.coefficient, d.power, tol / (10.0 * d.envelope));
  QuadOptions opt;
  opt.abs_tol = 0.9 * tol;
  opt.rel_tol = 0.9 * tol;
  opt.exec = exec;
  opt.max_panels = max_panels;
  opt.initial_panels = initial_panels(2.0 * R, spec.oscillation_scale, max_panels);
  const double brk[] = {d.center};
  QuadratureResult r = integrate_interval(spec.evaluator, d.center - R, d.center + R, opt, brk);
  r.truncation_radius = R;
  r.error_estimate += d.envelope * tail_bound(d.coefficient, d.power, R);
  if (!r.converged)
    throw NonConvergenceError("integrate_1d: panel budget of " + std::to_string(max_panels) +
                                  " exhausted, error estimate " + fmt_num(r.error_estimate),
                              r);
  return r;
}

QuadratureResult integrate_nd(const NdIntegrandSpec& spec, int dims, double tol, Exec exec) {
  if (dims != 2 && dims != 3) throw DomainError("integrate_nd: dims must be 2 or 3");
  if (static_cast<int>(spec.damping.size()) != dims)
    throw DomainError("integrate_nd: one damping profile per axis required");
  if (!(tol > 0.0)) throw DomainError("integrate_nd: tol must be positive");
  double envelope = 1.0;
  for (const Damping& d : spec.damping) {
    check_damping(d, "integrate_nd");
    envelope *= d.envelope;
  }
  std::vector<double> radius(dims), length(dims);
  for (int i = 0; i < dims; ++i) {
    double others = envelope;
    for (int j = 0; j < dims; ++j)
      if (j != i) others *= full_mass(spec.damping[j].coefficient, spec.damping[j].power);
    radius[i] = truncation_radius(spec.damping[i].coefficient, spec.damping[i].power,
                                  tol / (10.0 * dims * others));
    length[i] = 2.0 * radius[i];
  }
  double tail = 0.0;
  for (int i = 0; i < dims; ++i) {
    double others = envelope;
    for (int j = 0; j < dims; ++j)
      if (j != i) others *= full_mass(spec.damping[j].coefficient, spec.damping[j].power);
    tail += others * tail_bound(spec.damping[i].coefficient, spec.damping[i].power, radius[i]);
  }

  std::vector<std::atomic<double>> worst(dims);
  for (auto& w : worst) w.store(0.0);
  std::atomic<bool> inner_failed{false};

  const double share = 0.9 * tol;
  auto options = [&](int level) {
    QuadOptions o;
    double scale = 1.0;
    for (int j = 0; j < level; ++j) scale *= length[j];
    o.rel_tol = share / (2 << level);
    o.abs_tol = share / ((2 << level) * scale);
    o.initial_panels = initial_panels(length[level], spec.oscillation_scale, o.max_panels);
    o.exec = level == 0 ? exec : Exec::serial;
    return o;
  };

  // level-wise recursion; coordinates are passed by value so concurrent outer
  // nodes never share state
  std::function<QuadratureResult(int, std::array<double, 3>)> level_integral =
      [&](int level, std::array<double, 3> u) -> QuadratureResult {
    const Damping& d = spec.damping[level];
    auto f = [&, u](double v) mutable -> cplx {
      u[level] = v;
      if (level + 1 == dims) return spec.evaluator(std::span<const double>(u.data(), dims));
      const QuadratureResult inner = level_integral(level + 1, u);
      atomic_max(worst[level + 1], inner.error_estimate);
      if (!inner.converged) inner_failed.store(true);
      return inner.value;
    };
    const double brk[] = {d.center};
    return integrate_interval(f, d.center - radius[level], d.center + radius[level], options(level), brk);
  };

  QuadratureResult r = level_integral(0, {0.0, 0.0, 0.0});
  double err = r.error_estimate, scale = 1.0;
  for (int i = 1; i < dims; ++i) {
    scale *= length[i - 1];
    err += scale * worst[i].load();
  }
  r.error_estimate = err + tail;
  r.truncation_radius = *std::max_element(radius.begin(), radius.end());
  r.converged = r.converged && !inner_failed.load();
  if (!r.converged)
    throw NonConvergenceError("integrate_nd: panel budget exhausted, error estimate " +
                                  fmt_num(r.error_estimate),
                              r);
  return r;
}

QuadratureResult rotated_ray_integral(const RayIntegrandSpec& spec, double ray_angle, double tol,
                                      Exec exec) {
  check_damping(spec.damping, "rotated_ray_integral");
  if (!(tol > 0.0)) throw DomainError("rotated_ray_integral: tol must be positive");
  const Damping& d = spec.damping;
  const cplx dir = std::polar(1.0, ray_angle);
  // one-sided tail is half the two-sided bound
  const double R = truncation_radius(d.coefficient, d.power, 2.0 * tol / (10.0 * d.envelope));
  auto g = [&](double r) { return spec.evaluator(r * dir) * dir; };

  // the declared damping must hold near the truncation radius
  for (double frac : {0.5, 0.75, 1.0}) {
    const double r = frac * R;
    const double allowed = 10.0 * d.envelope * std::exp(-d.coefficient * std::pow(r, d.power)) + tol;
    const double seen = std::abs(g(r));
    if (!(seen <= allowed))
      throw ContourError("rotated_ray_integral: integrand grows along the ray at angle " +
                         fmt_num(ray_angle) + " (|f| = " + fmt_num(seen) + " at r = " + fmt_num(r) + ")");
  }

  QuadOptions opt;
  opt.abs_tol = 0.9 * tol;
  opt.rel_tol = 0.9 * tol;
  opt.exec = exec;
  QuadratureResult res = integrate_interval(g, 0.0, R, opt);
  res.truncation_radius = R;
  res.error_estimate += 0.5 * d.envelope * tail_bound(d.coefficient, d.power, R);
  if (!res.converged)
    throw NonConvergenceError("rotated_ray_integral: panel budget exhausted", res);
  return res;
}

QuadratureResult rotated_line_integral(const RayIntegrandSpec& spec, double right_angle,
                                       double left_angle, double tol, Exec exec) {
  const QuadratureResult r = rotated_ray_integral(spec, right_angle, 0.5 * tol, exec);
  const QuadratureResult l = rotated_ray_integral(spec, left_angle, 0.5 * tol, exec);
  QuadratureResult out;
  out.value = r.value - l.value;
  out.error_estimate = r.error_estimate + l.error_estimate;
  out.truncation_radius = std::max(r.truncation_radius, l.truncation_radius);
  out.panel_count = r.panel_count + l.panel_count;
  return out;
}

QuadratureResult shifted_line_integral(const RayIntegrandSpec& spec, double shift, double tol,
                                       Exec exec) {
  IntegrandSpec s;
  s.evaluator = [&](double u) { return spec.evaluator(cplx(u, shift)); };
  s.damping = spec.damping;
  return integrate_1d(s, tol, exec);
}

}  // namespace graze
