#pragma once

#include "besselzeta/characters.hpp"
#include "besselzeta/cusp_forms.hpp"
#include "besselzeta/power_series.hpp"
#include "besselzeta/types.hpp"

namespace besselzeta {

enum class SeriesFamily { Theta, Chi, CuspForm };

// Scalar truncation cutoff on the K-Bessel argument: terms with argument
// above mn_cutoff are dropped, and est_tail bounds what was dropped using
// K_nu(x) ~ sqrt(pi/2x) e^{-x} together with the empirical polynomial growth
// of the coefficient streams (10x safety factor folded into the constant).
struct TruncationBudget {
    double mn_cutoff = 0.0; // max K argument kept
    double est_tail = 0.0;  // analytic bound on the dropped mass
};

TruncationBudget make_budget(SeriesFamily family, Complex s, double tol);
TruncationBudget make_budget_for(double coeff_constant, double poly_order, double tol);

// Theorem-1 evaluator: for alpha in (0,1), beta = 1 - alpha,
//   zeta*(s) = Z_beta(s) + Z_alpha(1-s)
//            + sum_{m,n>=1} c_alpha(m) c_beta(n) (n/m)^{(s-beta)/4} K_{(s-beta)/2}(2 pi sqrt(mn)).
EvalResult riemann_series(Complex s, double alpha, double tol = 1e-10);

// same sum grouped over n = m*n' with an inner divisor sum (pure rearrangement)
EvalResult riemann_series_divisor(Complex s, double alpha, double tol = 1e-10);

// Critical-line form of the same identity: real-valued
//   zeta*(1/2+it) = 2 Re Z_{1/2}(1/2+it) + sum_m c(m)^2 K_{it/2}(2 pi m)
//                 + 2 sum_{m<n} c(m)c(n) cos((t/4) log(n/m)) K_{it/2}(2 pi sqrt(mn));
// at t = 0 the two Z values straddle the pole of Z_{1/2} at 1/2 and the
// formula is read as the limit (evaluated by averaging t = +-1e-5).
EvalResult critical_line_form(double t, double tol = 1e-10);

// Truncated right-hand side of the zeta(1/2+it) approximation:
//   zeta_{1/2}(1/2+it) + pi^{1/4+it/2} Gamma(1/4+it/2)^{-1} Z_{1/2}(it)
//   + pi^{1/4+it/2} Gamma(1/4+it/2)^{-1} sum_{n<=n_max} n^{it/4} (sum_{d|n} c(d)c(n/d) d^{-it/2}) K_{it/2}(2 pi sqrt(n))
// with zeta_{1/2}(s) = pi^{s/2} Gamma(s/2)^{-1} Z_{1/2}(s). n_max = -1 picks
// the cutoff from the budget; converges to zeta(1/2+it). t = 0 is rejected.
EvalResult zeta_fig_approx(double t, long long n_max, double tol = 1e-9);

// Theorem-2 evaluator: L*(s,chi) as the double K-Bessel sum over the
// c_{chi,alpha} streams. Entire in s; positivity-gated.
EvalResult dirichlet_series(Complex s, double alpha, const RealCharacter& chi,
                            double tol = 1e-10);

struct SpecialValues {
    double edge = 0.0;   // L(1, chi) resp. L((k+1)/2, f)
    double center = 0.0; // L(1/2, chi) resp. L(k/2, f)
    std::int64_t terms = 0;
};

// Corollary-2 series for L(1,chi) and L(1/2,chi) with c_chi = c_{chi,1/2}.
SpecialValues dirichlet_special_values(const RealCharacter& chi, double tol = 1e-10);

// Theorem-3 evaluator: L*(s,f) for self-dual level-q forms of weight
// k = 0 mod 4.
EvalResult cuspform_series(Complex s, double alpha, const CuspForm& f, double tol = 1e-10);

// Corollary-3 series: the edge value uses the literal exponential form (the
// K_{1/2} closed form), the central value the K_0 series.
SpecialValues cuspform_special_values(const CuspForm& f, double tol = 1e-10);

// internal-but-tested: Theorem-1 double sum with explicit streams (the check
// suite injects a perturbed stream through this entry)
EvalResult riemann_series_with(Complex s, const CoeffStream& ca, const CoeffStream& cb,
                               double tol);

} // namespace besselzeta
