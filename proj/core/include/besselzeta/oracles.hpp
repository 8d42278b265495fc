#pragma once

#include "besselzeta/characters.hpp"
#include "besselzeta/cusp_forms.hpp"
#include "besselzeta/types.hpp"

namespace besselzeta {

// Reference computations used only for validation. They deliberately avoid
// theta functions, Bessel functions and the fractional-power machinery; the
// one exception, cuspform_l_oracle, shares the reflected integral form with
// z_alpha_f but runs on an independently configured quadrature (tanh-sinh
// nodes, its own cutoff).

struct EMConfig {
    int direct_terms = 0;    // 0 = auto from |Im s|
    int bernoulli_order = 12; // number of even Bernoulli corrections (<= 14)
};

// zeta(s) by Euler-Maclaurin, ~1e-12 absolute inside the supported strip
// Re(s) > -5, |Im(s)| <= 100.
Complex zeta_em(Complex s, EMConfig cfg = {});

// Hurwitz zeta(s, a) for 0 < a <= 1, same strip.
Complex hurwitz_zeta(Complex s, double a, EMConfig cfg = {});

// zeta(s, a) - 1/(s-1): analytic at s = 1, used for the pole cancellation in
// Dirichlet L at s near 1.
Complex hurwitz_zeta_minus_pole(Complex s, double a, EMConfig cfg = {});

// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q); the individual Hurwitz poles
// cancel explicitly, so s = 1 is fine for non-principal characters.
Complex dirichlet_l_oracle(Complex s, const RealCharacter& chi);

// L*(s, f) via the alpha = 1 reflected integral, tanh-sinh quadrature.
Complex cuspform_l_oracle(Complex s, const CuspForm& f);

// completion factors used by the identity checks
Complex zeta_star_oracle(Complex s);                                // pi^{-s/2} Gamma(s/2) zeta(s)
Complex dirichlet_completion(Complex s, const RealCharacter& chi); // q^{(s+d)/2} pi^{-(s+d)/2} Gamma((s+d)/2)
Complex cuspform_completion(Complex s, const CuspForm& f);         // q^{s/2} (2 pi)^{-s} Gamma(s)

} // namespace besselzeta
