#include "graze/airy.hpp"

#include <cmath>

namespace graze {

namespace {

using qreal = __float128;
using qcplx = std::complex<qreal>;

constexpr qreal c1_q = 0.355028053887817239260063186004183176Q;
constexpr qreal c2_q = 0.258819403792806798405183560189203963Q;

// Above this ratio of term magnitudes to result the double series loses more
// than four digits and is redone in quad precision.
constexpr double kCancellationLimit = 1e4;

// sum |terms| / |result|, for the value and derivative separately
struct Conditioning {
  double value = 1.0;
  double derivative = 1.0;
};

template <class T>
double mag(const std::complex<T>& z) {
  return std::hypot(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

template <class T>
std::complex<T> lift(cplx z) {
  return {static_cast<T>(z.real()), static_cast<T>(z.imag())};
}

template <class T>
cplx lower(const std::complex<T>& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Ai = c1 f - c2 g with f = sum z^{3k}/(2.3)(5.6)..., g = sum z^{3k+1}/(3.4)(6.7)...
template <class T>
struct SeriesValue {
  std::complex<T> value, derivative;
};

template <class T>
SeriesValue<T> maclaurin_raw(std::complex<T> z, T c1, T c2, double eps, Conditioning* cond) {
  using C = std::complex<T>;
  const C z2 = z * z;
  const C z3 = z2 * z;
  C f = T(1), fp = T(0), g = z, gp = T(1);
  double af = 1.0, afp = 0.0, ag = mag(z), agp = 1.0;
  C p = T(1);
  T a = T(1), b = T(1);
  for (int k = 1; k < 200; ++k) {
    const T k3 = T(3 * k);
    a /= (k3 - T(1)) * k3;
    b /= k3 * (k3 + T(1));
    const C pk = p * z3;
    const C tf = a * pk;
    const C tfp = (k3 * a) * (p * z2);
    const C tg = b * (pk * z);
    const C tgp = ((k3 + T(1)) * b) * pk;
    f += tf;
    fp += tfp;
    g += tg;
    gp += tgp;
    p = pk;
    const double m = mag(tf) + mag(tfp) + mag(tg) + mag(tgp);
    af += mag(tf);
    afp += mag(tfp);
    ag += mag(tg);
    agp += mag(tgp);
    if (m <= eps * (af + afp + ag + agp)) break;
  }
  const C v = c1 * f - c2 * g;
  const C d = c1 * fp - c2 * gp;
  if (cond) {
    const double c1d = static_cast<double>(c1), c2d = static_cast<double>(c2);
    cond->value = (c1d * af + c2d * ag) / std::max(mag(v), 1e-300);
    cond->derivative = (c1d * afp + c2d * agp) / std::max(mag(d), 1e-300);
  }
  return {v, d};
}

template <class T>
AiryValue maclaurin(cplx z, T c1, T c2, double eps, Conditioning* cond) {
  const SeriesValue<T> s = maclaurin_raw<T>(lift<T>(z), c1, c2, eps, cond);
  return {lower(s.value), lower(s.derivative)};
}

// Where Ai(z) and Ai(omega z) both grow like e^{|zeta|} the Wronskian is a
// difference of products of size e^{2|zeta|}; it is formed in quad precision
// up to this radius.
constexpr double kQuadWronskianRadius = 10.0;

AiryValue series(cplx z) {
  Conditioning cond;
  AiryValue r = maclaurin<double>(z, airy_c1, airy_c2, 1e-18, &cond);
  if (cond.value > kCancellationLimit || cond.derivative > kCancellationLimit)
    r = maclaurin<qreal>(z, c1_q, c2_q, 1e-36, nullptr);
  return r;
}

struct AsymSums {
  cplx su;
  cplx sv;
};

// sum (-1)^k u_k zeta^{-k} and sum (-1)^k v_k zeta^{-k}; optimal truncation
// when max_terms < 0.
AsymSums asym_sums(cplx zeta, int max_terms) {
  const cplx step = -1.0 / zeta;
  cplx su = 1.0, sv = 1.0, pw = 1.0;
  double u = 1.0, prev = 1.0;
  const int limit = max_terms < 0 ? 80 : max_terms;
  for (int k = 1; k <= limit; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
    const double v = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
    pw *= step;
    const cplx tu = u * pw, tv = v * pw;
    if (max_terms < 0) {
      const double m = std::abs(tv);
      if (m >= prev) break;
      prev = m;
    }
    su += tu;
    sv += tv;
    if (max_terms < 0 && std::abs(tv) < 1e-17 * std::abs(sv) && std::abs(tu) < 1e-17 * std::abs(su))
      break;
  }
  return {su, sv};
}

constexpr double two_sqrt_pi = 3.5449077018110320546;

AiryValue asym_scaled(cplx z) {
  const AsymSums s = asym_sums(airy_zeta(z), -1);
  const cplx q = std::pow(z, 0.25);
  return {s.su / (two_sqrt_pi * q), -q * s.sv / two_sqrt_pi};
}

bool in_main_sector(cplx z) { return std::abs(std::arg(z)) <= 2.0 * pi / 3.0 + 1e-12; }

}  // namespace

cplx airy_zeta(cplx z) { return (2.0 / 3.0) * z * std::sqrt(z); }

AiryValue airy_ai_scaled(cplx z, const AiryConfig& cfg) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("airy: non-finite argument");
  if (std::abs(z) < cfg.crossover_radius) {
    const AiryValue s = series(z);
    const cplx e = std::exp(airy_zeta(z));
    return {s.value * e, s.derivative * e};
  }
  if (in_main_sector(z)) return asym_scaled(z);
  // Ai(z) = -omega Ai(omega z) - omega^2 Ai(omega^2 z); both rotated points
  // land inside |arg| < 2pi/3.
  const cplx w2 = std::conj(omega);
  const cplx z1 = omega * z, z2 = w2 * z;
  const AiryValue s1 = asym_scaled(z1), s2 = asym_scaled(z2);
  const cplx zeta = airy_zeta(z);
  const cplx e1 = std::exp(zeta - airy_zeta(z1));
  const cplx e2 = std::exp(zeta - airy_zeta(z2));
  return {-omega * s1.value * e1 - w2 * s2.value * e2,
          -w2 * s1.derivative * e1 - omega * s2.derivative * e2};
}

AiryValue airy_ai(cplx z, const AiryConfig& cfg) {
  if (!(std::abs(z) <= cfg.max_radius))
    throw DomainError("airy_ai: |z| exceeds the supported radius " + fmt_num(cfg.max_radius));
  if (std::abs(z) < cfg.crossover_radius) return series(z);
  const AiryValue s = airy_ai_scaled(z, cfg);
  const cplx e = std::exp(-airy_zeta(z));
  return {s.value * e, s.derivative * e};
}

AiryValue airy_rotated(cplx z, const AiryConfig& cfg) {
  const AiryValue a = airy_ai(omega * z, cfg);
  return {a.value, omega * a.derivative};
}

cplx wronskian(cplx z, const AiryConfig& cfg) {
  if (std::abs(z) <= kQuadWronskianRadius) {
    // omega to quad precision: -1/2 + i sqrt(3)/2
    const qcplx w(-0.5Q, 0.866025403784438646763723170752936183Q);
    const qcplx zq = lift<qreal>(z);
    const SeriesValue<qreal> a = maclaurin_raw<qreal>(w * zq, c1_q, c2_q, 1e-36, nullptr);
    const SeriesValue<qreal> b = maclaurin_raw<qreal>(zq, c1_q, c2_q, 1e-36, nullptr);
    return lower(a.value * b.derivative - w * a.derivative * b.value);
  }
  const AiryValue a = airy_rotated(z, cfg);
  const AiryValue b = airy_ai(z, cfg);
  return a.value * b.derivative - a.derivative * b.value;
}

cplx wronskian_zero() { return (omega - 1.0) / (2.0 * pi * std::sqrt(3.0)); }

cplx airy_asymptotic(cplx z, int order, const AiryConfig& cfg) {
  if (order < 0) throw DomainError("airy_asymptotic: negative order");
  if (std::abs(z) < 2.0) throw DomainError("airy_asymptotic: requires |z| >= 2");
  if (std::abs(std::arg(z)) >= pi - cfg.sector_delta)
    throw DomainError("airy_asymptotic: |arg z| must stay below pi - " + fmt_num(cfg.sector_delta));
  const cplx zeta = airy_zeta(z);
  const AsymSums s = asym_sums(zeta, order);
  return std::exp(-zeta) / (two_sqrt_pi * std::pow(z, 0.25)) * s.su;
}

cplx airy_ratio(cplx z, const AiryConfig& cfg) {
  if (std::abs(z) >= cfg.crossover_radius && in_main_sector(z)) {
    const AsymSums s = asym_sums(airy_zeta(z), -1);
    return -std::sqrt(z) * s.sv / s.su;
  }
  const AiryValue s = airy_ai_scaled(z, cfg);
  const double log_abs_ai = std::log(std::abs(s.value)) - airy_zeta(z).real();
  if (!(log_abs_ai >= std::log(cfg.zero_threshold)))
    throw DegeneracyError("airy_ratio: |Ai(z)| below " + fmt_num(cfg.zero_threshold) +
                          " (too close to a zero of Ai)");
  return s.derivative / s.value;
}

}  // namespace graze
