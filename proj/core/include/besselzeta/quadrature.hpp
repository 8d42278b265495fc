#pragma once

#include <functional>
#include <vector>

#include "besselzeta/types.hpp"

namespace besselzeta {

// Gauss-Legendre rule on [-1,1]. Rules are computed once per order by Newton
// iteration on P_n and cached behind a mutex; the returned reference stays
// valid for the lifetime of the program.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int order);

struct QuadratureSpec {
    int panel_count = 8;
    int nodes_per_panel = 16;
    double upper_cutoff = 10.0; // chosen so the analytic tail is < target_abs_tol
    double target_abs_tol = 1e-12;
    double target_rel_tol = 0.0; // 0 disables relative convergence
    int max_refinements = 8;     // panel-count doublings before giving up
};

// Composite Gauss-Legendre on [lower, upper], refined by doubling the panel
// count until two successive levels agree within the target. The difference
// of the last two levels is the reported error estimate.
EvalResult integrate_panels(const std::function<Complex(double)>& f, double lower,
                            double upper, const QuadratureSpec& spec);

// Semi-infinite integral of a super-exponentially decaying integrand; the
// caller guarantees (via spec.upper_cutoff) that the tail beyond the cutoff
// is below target_abs_tol.
EvalResult integrate_decaying(const std::function<Complex(double)>& f, double lower,
                              const QuadratureSpec& spec);

// tanh-sinh rule on [a,b]. Different node family from the panel engine; used
// where an independently configured quadrature is wanted as a cross-check.
EvalResult integrate_tanh_sinh(const std::function<Complex(double)>& f, double a,
                               double b, double target_abs_tol, int max_level = 12);

} // namespace besselzeta
