#pragma once

#include <complex>
#include <cstdint>

namespace besselzeta {

using Complex = std::complex<double>;

// Value of a quadrature or series evaluation together with an a-posteriori
// absolute error estimate and work counters.
struct EvalResult {
    Complex value{0.0, 0.0};
    double abs_err_est = 0.0;
    std::int64_t terms = 0; // series terms summed (0 for pure quadratures)
    std::int64_t nodes = 0; // quadrature nodes consumed

    EvalResult& operator+=(const EvalResult& o) {
        value += o.value;
        abs_err_est += o.abs_err_est;
        terms += o.terms;
        nodes += o.nodes;
        return *this;
    }
};

// Single global accuracy knob. Elementary evaluations (theta sums, gamma,
// one quadrature) target abs_tol; Bessel evaluations default a notch tighter
// because series evaluators sum many of them.
struct Precision {
    double abs_tol = 1e-12;
    double bessel_abs_tol = 1e-13;
};

Precision& default_precision();
double default_abs_tol();
double default_bessel_tol();

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace besselzeta
