#pragma once

#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

namespace graze {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};
// e^{2 pi i / 3}
inline constexpr cplx omega{-0.5, 0.86602540378443864676};

// Execution policy for kernels that have an OpenMP path. Both policies give
// bit-identical results; the serial one is the reference.
enum class Exec { serial, parallel };

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the supported region of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Singular configuration (vanishing denominator, Airy zero proximity, ...).
struct DegeneracyError : Error {
  using Error::Error;
};

// Fractional power requested on or across its branch cut.
struct BranchError : Error {
  using Error::Error;
};

// Integrand grows along a rotated contour.
struct ContourError : Error {
  using Error::Error;
};

struct NumericalError : Error {
  using Error::Error;
};

inline std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace graze
