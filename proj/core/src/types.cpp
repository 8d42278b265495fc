#include "besselzeta/types.hpp"

namespace besselzeta {

Precision& default_precision() {
    static Precision p;
    return p;
}

double default_abs_tol() { return default_precision().abs_tol; }
double default_bessel_tol() { return default_precision().bessel_abs_tol; }

} // namespace besselzeta
