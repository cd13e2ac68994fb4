#include <gtest/gtest.h>

#include "graze/airy.hpp"
#include "graze/oracles.hpp"

using namespace graze;

namespace {

struct Reference {
  double re, im;
  cplx ai, aip;
};

// 40-digit mpmath values, rounded to double
const Reference kTable[] = {
    {0.0, 0.0, {0.35502805388781724, 0.0}, {-0.2588194037928068, 0.0}},
    {1.0, 0.0, {0.13529241631288142, 0.0}, {-0.15914744129679321, 0.0}},
    {-1.0, 0.0, {0.53556088329235212, 0.0}, {-0.010160567116645209, 0.0}},
    {2.5, 0.0, {0.01572592338047049, 0.0}, {-0.02625088103590323, 0.0}},
    {1.0, 1.0, {0.060458308371838149, -0.1518895658771814}, {-0.13062795349964752, 0.16306759644932392}},
    {-3.0, 2.0, {-4.4196895542641673, 5.4546225177826674}, {11.878523564741867, 5.2093518478839737}},
    {5.0, -4.0, {-0.00057327178593554284, 5.8592521945090309e-5}, {0.0013386386619741766, -0.0006087023318882433}},
    {-6.5, 0.0, {-0.2380203019971158, 0.0}, {-0.67495249251320217, 0.0}},
    {0.5, 6.9, {-320.55594961544018, 136.03935723350068}, {857.25705855489039, 299.96718054693942}},
    {0.0, 8.0, {435.62314214160257, 7206.3447489041297}, {13311.58997252232, -15274.898369529775}},
    {10.0, 0.0, {1.1047532552898686e-10, 0.0}, {-3.5206336767389236e-10, 0.0}},
    {-12.0, 0.0, {-0.066555175054373129, 0.0}, {1.0231104533679707, 0.0}},
    {15.0, 15.0, {-1.5242800743788566e-12, 1.2389854126760858e-12}, {8.6723805670530989e-12, -2.6084397373508569e-12}},
    {25.0, 0.0, {8.1160268246913867e-38, 0.0}, {-4.066089337243281e-37, 0.0}},
    {15.0, -25.98076211353316, {-0.11918042398792455, 0.018020392585880415}, {0.51660111078103189, -0.41108464529158383}},
    {-20.0, 3.0, {-23003.578637620494, 87419.751094449969}, {399303.84995793384, 74953.599923672786}},
    {0.0, 40.0, {6.7105483620776695e+50, -1.8488547494931224e+50}, {-3.826731276726883e+51, -2.1700120259296453e+51}},
    {4.5, -7.794228634059948, {0.13517288811516518, -0.090821013433955564}, {-0.21906084364213394, 0.4368250249807469}},
    {-3.475, 6.018876556301849, {30536.876043246415, -17630.473603284073}, {-79364.461830041687, -45821.093400343536}},
    {-3.525, 6.105479096680292, {39638.71593025831, -22885.423312287525}, {-103791.18894885341, -59923.870878114594}},
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(Airy, MatchesReferenceTable) {
  for (const auto& r : kTable) {
    const cplx z(r.re, r.im);
    const AiryValue v = airy_ai(z);
    const double tol = std::abs(z) <= 10 ? 1e-10 : 1e-8;
    EXPECT_LE(rel(v.value, r.ai), tol) << "z=" << z;
    EXPECT_LE(rel(v.derivative, r.aip), tol) << "z=" << z;
  }
}

TEST(Airy, ValuesAtZero) {
  const AiryValue v = airy_ai(0.0);
  EXPECT_NEAR(v.value.real(), 0.355028053887817, 1e-15);
  EXPECT_NEAR(v.derivative.real(), -0.258819403792807, 1e-15);
  EXPECT_EQ(v.value.imag(), 0.0);
}

TEST(Airy, AsymptoticAgreesAtTen) {
  EXPECT_LE(rel(airy_asymptotic(10.0, 1), airy_ai(10.0).value), 1e-2);
}

TEST(Airy, ConnectionIdentityAtOnePlusI) {
  const cplx z(1, 1);
  const cplx s = airy_ai(z).value + omega * airy_ai(omega * z).value + omega * omega * airy_ai(omega * omega * z).value;
  EXPECT_LE(std::abs(s), 1e-10);
}

TEST(Airy, OutsideRadiusIsRefused) {
  EXPECT_THROW(airy_ai(cplx(101, 0)), DomainError);
  EXPECT_THROW(airy_ai(cplx(NAN, 0)), DomainError);
}

TEST(AiryRotated, Definitions) {
  EXPECT_EQ(airy_rotated(0.0).value, airy_ai(0.0).value);
  EXPECT_LE(rel(airy_rotated(1.0).value, airy_ai(omega).value), 1e-15);
  const cplx d = oracle::derivative([](double x) { return airy_rotated(x).value; }, 0.5, 1, 1e-2);
  EXPECT_LE(rel(d, airy_rotated(0.5).derivative), 1e-6);
}

TEST(Wronskian, ClosedFormAtZero) {
  const cplx w0 = (std::exp(2.0 * pi * I / 3.0) - 1.0) / (2.0 * pi * std::sqrt(3.0));
  EXPECT_LE(std::abs(wronskian(0.0) - w0), 1e-15);
  EXPECT_LE(std::abs(wronskian_zero() - w0), 1e-16);
  EXPECT_LE(std::abs(wronskian(cplx(2, -1)) - w0), 1e-9);
  EXPECT_LE(std::abs(wronskian(-3.0) - w0), 1e-9);
}

TEST(AiryAsymptotic, Examples) {
  EXPECT_LE(rel(airy_asymptotic(25.0, 0), airy_ai(25.0).value), 10.0 * std::pow(25.0, -1.5));
  const cplx z = 8.0 * std::polar(1.0, pi / 4);
  EXPECT_LE(rel(airy_asymptotic(z, 0), airy_ai(z).value), 0.01);
  const cplx exact = airy_ai(4.0).value;
  EXPECT_LT(rel(airy_asymptotic(4.0, 1), exact), rel(airy_asymptotic(4.0, 0), exact));
}

TEST(AiryAsymptotic, RefusesExcludedSector) {
  EXPECT_THROW(airy_asymptotic(cplx(-5, 0.01), 0), DomainError);
  EXPECT_THROW(airy_asymptotic(1.0, 0), DomainError);
  EXPECT_THROW(airy_asymptotic(5.0, -1), DomainError);
}

TEST(AiryRatio, Examples) {
  EXPECT_NEAR(airy_ratio(0.0).real(), -0.729011132947, 1e-11);
  const double z = 30;
  const double lead = -std::sqrt(z) - 0.25 / z;
  EXPECT_LE(std::abs(airy_ratio(z).real() / lead - 1.0), 1e-3);
  const cplx z9 = 9.0 * std::polar(1.0, -pi / 3);
  const AiryValue v = airy_ai(z9);
  EXPECT_LE(rel(airy_ratio(z9), v.derivative / v.value), 1e-3);
}

TEST(AiryRatio, ContinuousAcrossCrossover) {
  const cplx dir = std::polar(1.0, -pi / 3);
  const cplx below = airy_ratio((7.0 - 1e-9) * dir), above = airy_ratio((7.0 + 1e-9) * dir);
  EXPECT_LE(rel(below, above), 1e-9);
}

TEST(AiryRatio, NearZeroIsDegenerate) {
  // first real zero of Ai
  EXPECT_THROW(airy_ratio(-2.338107410459767), DegeneracyError);
}

TEST(AiryScaled, BoundedInSector) {
  for (double r : {1.0, 10.0, 60.0, 500.0})
    for (double a : {-2.0, -1.0, 0.0, 1.5, 2.09}) {
      const AiryValue s = airy_ai_scaled(std::polar(r, a));
      EXPECT_TRUE(std::isfinite(std::abs(s.value)));
      EXPECT_LE(std::abs(s.value), 1.0);
    }
}

// Properties

TEST(AiryProperty, WronskianConstancyOnDisk) {
  const cplx w0 = wronskian_zero();
  for (int i = 0; i < 100; ++i) {
    // golden-angle spiral over |z| <= 8
    const cplx z = std::polar(8.0 * std::sqrt((i + 0.5) / 100.0), i * 2.399963229728653);
    EXPECT_LE(std::abs(wronskian(z) - w0), 1e-9) << "z=" << z;
  }
}

TEST(AiryProperty, SectorAsymptoticsConstantBelowOne) {
  double c = 0;
  for (double z = 10; z <= 40; z += 0.5)
    c = std::max(c, std::abs(airy_asymptotic(z, 0) / airy_ai(z).value - 1.0) * std::pow(z, 1.5));
  EXPECT_LE(c, 1.0);
}

TEST(AiryProperty, CauchyRiemann) {
  for (double re = -3.5; re <= 3.5; re += 1.0)
    for (double im = -3.5; im <= 3.5; im += 1.0) {
      const cplx z(re, im);
      if (std::abs(z) > 5) continue;
      const cplx dx = oracle::derivative([&](double s) { return airy_ai(z + s).value; }, 0.0, 1, 1e-2);
      const cplx dy = oracle::derivative([&](double s) { return airy_ai(z + I * s).value; }, 0.0, 1, 1e-2);
      EXPECT_LE(std::abs(dx + I * dy) / std::max(1.0, std::abs(dx)), 1e-5) << "z=" << z;
      EXPECT_LE(rel(dx, airy_ai(z).derivative), 1e-6) << "z=" << z;
    }
}

TEST(AiryProperty, ConnectionIdentityOnGrid) {
  for (double re = -5; re <= 5; re += 0.5)
    for (double im = -5; im <= 5; im += 0.5) {
      const cplx z(re, im);
      if (std::abs(z) > 5) continue;
      const cplx s = airy_ai(z).value + omega * airy_ai(omega * z).value + omega * omega * airy_ai(omega * omega * z).value;
      EXPECT_LE(std::abs(s), 1e-9) << "z=" << z;
    }
}

// the truncated asymptotic series is good to about 1e-10 near |z| = 6.5
TEST(AiryProperty, OverlapAtCrossoverRadius) {
  AiryConfig small;
  small.crossover_radius = 6.0;
  for (double a = -2.0; a <= 2.0; a += 0.25) {
    const cplx z = std::polar(6.5, a);
    EXPECT_LE(rel(airy_ai(z, small).value, airy_ai(z).value), 1e-9) << "z=" << z;
  }
}
