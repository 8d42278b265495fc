#pragma once

#include "besselzeta/types.hpp"

namespace besselzeta {

// Supported order envelope for bessel_k. Wider orders are rejected rather
// than silently degraded.
inline constexpr double kBesselMaxRe = 30.0;
inline constexpr double kBesselMaxIm = 30.0;

// Gamma(z) for complex z. Lanczos rational approximation (g = 607/128,
// 15 terms) with reflection for Re(z) < 1/2; relative accuracy ~1e-13 for
// |z| <= 100. Poles and overflow raise DomainError.
Complex complex_gamma(Complex z);

// K_nu(x) for complex order and x > 0, computed from
//   K_nu(x) = int_0^inf exp(-x cosh u) cosh(nu u) du
// on composite Gauss-Legendre panels with node budget scaled to the
// oscillation |Im nu|. Absolute accuracy target; exponentially small values
// below the representable range return exactly 0.
Complex bessel_k(Complex nu, double x, double abs_tol = 0.0);

// K_{i tau}(x), real-valued. Uses the plain cosh integral where the value is
// of the same scale as the integrand (tau <~ x) and a line shifted to
// Im u = -(pi/2 - eps) otherwise, so the result keeps ~1e-12 RELATIVE
// accuracy even at magnitude e^{-pi tau/2}. The critical-line series and the
// figure evaluation need this; everything else can live with absolute error.
double bessel_k_imag(double tau, double x, double rel_tol = 1e-12);

} // namespace besselzeta
