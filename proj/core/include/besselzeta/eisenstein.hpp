#pragma once

#include "besselzeta/types.hpp"

namespace besselzeta {

struct EisensteinPoint {
    double y = 1.0;
    Complex s{2.0, 0.0};
    double alpha = 0.5;
    double beta = 0.5;
};

// E_{alpha,beta}(y,s), the Mellin transform of theta(y^2 t^2)^alpha
// theta(y^-2 t^2)^beta - 1, evaluated from its reflected split form
//   y^{b-a}/(s-a-b) - 1/s + int_1^inf (...) t^s dt/t + y^{b-a} int_1^inf (...) t^{a+b-s} dt/t,
// valid on all of C away from the poles {0, alpha+beta}.
EvalResult e_integral(const EisensteinPoint& p, double tol = 1e-10);

// The same function from its K-Bessel expansion
//   Z_beta(s) y^s + Z_alpha(s-beta) y^{2beta-s}
//   + y^beta sum c_alpha(m) c_beta(n) (n/m)^{(s-beta)/4} K_{(s-beta)/2}(2 pi y^2 sqrt(mn)).
// The two Z terms carry the poles. Cross-checking this against e_integral is
// the numerical verification of the expansion theorem.
EvalResult e_expansion(const EisensteinPoint& p, double tol = 1e-10);

// gamma_alpha = lim_{s->alpha} (Z_alpha(s) - 1/(s-alpha)); three evaluation
// routes that must agree: the pole-free integral (returned), symmetric
// Richardson extrapolation, and the reflected limit at w -> 0.
struct GammaAlphaPaths {
    double direct = 0.0;      // -1/alpha + int_1^inf (theta^alpha - 1)(t^alpha + 1) dt/t
    double richardson = 0.0;  // extrapolated from Z(alpha +- h) - 1/(+-h)
    double reflected = 0.0;   // extrapolated from Z(+-h) + 1/(+-h) at 0
    double residual = 0.0;    // extrapolation consistency estimate
};
GammaAlphaPaths gamma_alpha_paths(double alpha, double tol = 1e-11);
double gamma_alpha_const(double alpha, double tol = 1e-11);

// Limit value lim_{s->2alpha} (E_alpha(y,s) - 1/(s-2alpha)), evaluated
// directly from the expansion:
//   Z_alpha(2alpha) y^{2alpha} + gamma_alpha - log y
//   + y^alpha sum c_alpha(m) c_alpha(n) (n/m)^{alpha/4} K_{alpha/2}(2 pi y^2 sqrt(mn)).
double kronecker_limit(double y, double alpha, double tol = 1e-9);

// Richardson-extrapolated limit of the integral form, the independent route.
struct KroneckerPaths {
    double rhs = 0.0;
    double extrapolated = 0.0;
    double residual = 0.0;
};
KroneckerPaths kronecker_limit_paths(double y, double alpha, double tol = 1e-9);

} // namespace besselzeta
