#pragma once

#include "besselzeta/characters.hpp"
#include "besselzeta/cusp_forms.hpp"
#include "besselzeta/types.hpp"

namespace besselzeta {

struct ZEvalConfig {
    double tol = 0.0;               // 0 = default_abs_tol()
    double t_cutoff = 0.0;          // 0 = auto from the per-family decay rate
    double pole_guard_radius = 1e-6;
};

// Z_alpha(s) = Mellin transform of theta(t^2)^alpha - 1, continued to all of
// C through the reflected representation
//   Z_alpha(s) = 1/(s-alpha) - 1/s + int_1^inf (theta(t^2)^alpha - 1)(t^s + t^{alpha-s}) dt/t.
// Poles at s = 0 and s = alpha sit behind a hard guard radius. For large
// |Im s| the evaluation switches to a rotated-contour form of the same
// identity that preserves relative accuracy at the e^{-pi|Im s|/4} scale.
EvalResult z_alpha_full(Complex s, double alpha, const ZEvalConfig& cfg = {});
Complex z_alpha(Complex s, double alpha, const ZEvalConfig& cfg = {});

// zeta*(s) = Z_1(s)
Complex zeta_star(Complex s, const ZEvalConfig& cfg = {});

// Z_alpha(s,chi): entire, from the two reflected integrals with the t^{delta alpha}
// twist. Positivity-gated.
EvalResult z_alpha_chi_full(Complex s, double alpha, const RealCharacter& chi,
                            const ZEvalConfig& cfg = {});
Complex z_alpha_chi(Complex s, double alpha, const RealCharacter& chi,
                    const ZEvalConfig& cfg = {});

// Z_alpha(s,f): entire, reflected integrals of f(iy/sqrt(q))^alpha with the
// y^{k alpha - s} companion. Positivity- and self-duality-gated.
EvalResult z_alpha_f_full(Complex s, double alpha, const CuspForm& f,
                          const ZEvalConfig& cfg = {});
Complex z_alpha_f(Complex s, double alpha, const CuspForm& f, const ZEvalConfig& cfg = {});

} // namespace besselzeta
