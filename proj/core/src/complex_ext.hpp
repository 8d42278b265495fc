#pragma once

#include <cmath>

#include "besselzeta/types.hpp"

namespace besselzeta::detail {

// base^w for base > 0, principal branch
inline Complex cpow_pos(double base, Complex w) { return std::exp(w * std::log(base)); }

// log(1+w), full relative accuracy for small |w| (Kahan's compensation)
inline Complex clog1p(Complex w) {
    Complex u = 1.0 + w;
    if (u == Complex(1.0, 0.0)) return w;
    return std::log(u) * (w / (u - 1.0));
}

// exp(z)-1, stable for small |z|; requires |Im z| < pi
inline Complex cexpm1(Complex z) {
    Complex u = std::exp(z);
    if (u == Complex(1.0, 0.0)) return z;
    Complex l = std::log(u);
    if (l == Complex(0.0, 0.0)) return z;
    return (u - 1.0) * (z / l);
}

} // namespace besselzeta::detail
