#pragma once

#include "graze/common.hpp"

namespace graze {

struct AiryValue {
  cplx value;
  cplx derivative;
};

struct AiryConfig {
  // Maclaurin series inside this radius, asymptotic expansions outside.
  double crossover_radius = 7.0;
  // Largest |z| accepted by airy_ai; Ai and Ai' stay representable up to here.
  double max_radius = 100.0;
  // airy_asymptotic refuses |arg z| >= pi - sector_delta.
  double sector_delta = 0.1;
  // airy_ratio refuses points where |Ai(z)| falls below this.
  double zero_threshold = 1e-12;
};

// Ai(0) and -Ai'(0).
inline constexpr double airy_c1 = 0.355028053887817239260063186004183176;
inline constexpr double airy_c2 = 0.258819403792806798405183560189203963;

// Ai(z) and Ai'(z). Relative error about 1e-13 away from zeros of Ai.
AiryValue airy_ai(cplx z, const AiryConfig& cfg = {});

// Ai(z) e^{zeta} and Ai'(z) e^{zeta} with zeta = (2/3) z^{3/2} (principal).
// Bounded for |arg z| <= 2pi/3; no radius limit.
AiryValue airy_ai_scaled(cplx z, const AiryConfig& cfg = {});

// A(z) = Ai(omega z) and A'(z) = omega Ai'(omega z).
AiryValue airy_rotated(cplx z, const AiryConfig& cfg = {});

// A(z) Ai'(z) - A'(z) Ai(z).
cplx wronskian(cplx z, const AiryConfig& cfg = {});

// Exact value of the Wronskian, (omega - 1) / (2 pi sqrt 3).
cplx wronskian_zero();

// Leading asymptotic form of Ai times the first `order` correction terms.
cplx airy_asymptotic(cplx z, int order, const AiryConfig& cfg = {});

// Ai'(z) / Ai(z).
cplx airy_ratio(cplx z, const AiryConfig& cfg = {});

// (2/3) z^{3/2} on the principal branch.
cplx airy_zeta(cplx z);

}  // namespace graze
