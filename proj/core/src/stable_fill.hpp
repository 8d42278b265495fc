#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "besselzeta/types.hpp"

namespace besselzeta::detail {

// In-place iterative radix-2 FFT, X_k = sum_j x_j exp(sign 2 pi i jk / M).
void fft_pow2(std::vector<Complex>& x, int sign);

// Principal-cusp expansion hook: when the sample point u (|u| = r, near the
// given root of unity) lies in a region where the direct series value is
// below the floating-point phase-reliability floor, the family supplies
// log(bracket(u)) from its functional equation instead.
using CuspLog = std::function<bool(Complex u, Complex& log_val)>;

// Coefficients c_0..c_{k_max} of bracket(u)^alpha where bracket has the exact
// expansion 1 + sum_{j>=1} base[j] u^j. The bracket must be zero-free in the
// open unit disk and positive on (0,1) (the stream gates guarantee this).
//
// Method: sample bracket on |u| = r = e^{-kappa/k_max} via FFT of the exact
// coefficients, take a phase-continuous logarithm along the circle (ratio
// unwrapping, anchored real-positive at u = r, with the cusp formulas
// bridging the dead zones near u = +-1), exponentiate, transform back.
// Stable: errors stay at e^{kappa m / k_max} * eps * scale, in contrast to
// the e^{c sqrt(m)} blowup of the forward power-rule recurrence.
std::vector<double> circle_power_coeffs(const std::function<double(std::size_t)>& base,
                                        double alpha, std::size_t k_max, double kappa,
                                        const CuspLog& at_plus1, const CuspLog& at_minus1);

// Coefficients c_0..c_{k_max} of exp(L(u)) where L(u) = sum_{j>=1} lam_j u^j
// is handed over explicitly (the bracket has a known product expansion, e.g.
// the theta triple product or an eta power). Entirely free of branch
// decisions: samples of L come from one FFT, then pointwise exp, then the
// inverse transform.
std::vector<double> exp_series_coeffs(const std::function<double(std::size_t)>& lam,
                                      std::size_t k_max, double kappa);

} // namespace besselzeta::detail
