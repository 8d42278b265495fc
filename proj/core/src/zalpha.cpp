#include "besselzeta/zalpha.hpp"

#include <cmath>
#include <numbers>

#include "besselzeta/errors.hpp"
#include "besselzeta/quadrature.hpp"
#include "besselzeta/theta.hpp"
#include "complex_ext.hpp"

namespace besselzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRotateThreshold = 15.0; // |Im s| above which the rotated form is used
constexpr double kRotationMargin = 0.15;  // d = pi/4 - margin

using detail::cexpm1;
using detail::clog1p;
using detail::cpow_pos;

double resolve_tol(const ZEvalConfig& cfg) {
    return cfg.tol > 0.0 ? cfg.tol : default_abs_tol();
}

// theta(t^2)^alpha - 1 on the real axis, no cancellation for large t
double theta_pow_m1(double t_sq, double alpha) {
    return std::expm1(alpha * std::log1p(theta0_minus1(t_sq)));
}

int osc_panels(double omega, double log_upper) {
    // phase of t^{i omega} over [1, T] is omega * ln T
    return std::max(8, static_cast<int>(std::ceil(std::abs(omega) * log_upper / 4.0)) + 4);
}

EvalResult z_alpha_plain(Complex s, double alpha, double tol, double t_cutoff) {
    const double sigma_max =
        std::max({std::abs(s.real()), std::abs(alpha - s.real()), 1.0});
    double upper = t_cutoff;
    if (upper <= 1.0) {
        upper = 2.0;
        while (-kPi * upper * upper + sigma_max * std::log(upper) + std::log(2.0 * alpha + 2.0) >
               std::log(tol) - 5.0) {
            upper += 0.25;
            if (upper > 40.0) break;
        }
    }
    auto integrand = [&](double t) -> Complex {
        return theta_pow_m1(t * t, alpha) *
               (cpow_pos(t, s - 1.0) + cpow_pos(t, alpha - s - 1.0));
    };
    QuadratureSpec spec;
    spec.panel_count = osc_panels(s.imag(), std::log(upper));
    spec.target_abs_tol = tol * 0.5;
    EvalResult r = integrate_panels(integrand, 1.0, upper, spec);
    r.value += 1.0 / (s - alpha) - 1.0 / s;
    return r;
}

// Rotated form, valid for Im(s) > 0. With t = e^v, the two Mellin pieces are
// rotated to v = +id + r and v = -id + r (d < pi/4). The arc contributions
// cancel exactly against the theta functional equation, leaving
//   Z = e^{i(s-a)d}/(s-a) - e^{isd}/s + e^{isd} H+ + e^{i(s-a)d} H-
//   H+ = int_0^R (theta(e^{2id+2r})^a - 1) e^{s r} dr
//   H- = int_0^R (theta(e^{-2id+2r})^a - 1) e^{(a-s) r} dr
// where every piece is individually of the size e^{-Im(s) d} of the result.
EvalResult z_alpha_rotated(Complex s, double alpha, double tol) {
    const double d = kPi / 4.0 - kRotationMargin;
    const double cos2d = std::cos(2.0 * d);
    const Complex w = std::exp(Complex(0.0, 2.0 * d));
    const double sigma_max = std::max({s.real(), alpha - s.real(), 0.0});

    double upper = 0.5;
    while (kPi * cos2d * std::exp(2.0 * upper) - sigma_max * upper < 50.0) upper += 0.25;

    auto theta_piece = [&](Complex x) -> Complex {
        Complex th_m1 = theta0_complex(x) - 1.0;
        return cexpm1(alpha * clog1p(th_m1));
    };
    auto h_plus = [&](double r) -> Complex {
        return theta_piece(w * std::exp(2.0 * r)) * std::exp(s * r);
    };
    auto h_minus = [&](double r) -> Complex {
        return theta_piece(std::conj(w) * std::exp(2.0 * r)) * std::exp((alpha - s) * r);
    };

    // oscillation: e^{i Im(s) r} plus the theta phase pi sin(2d) e^{2r} n^2 on
    // the live region; budget panels for both
    const double live = std::log(std::max(50.0 / (kPi * cos2d), 2.0)) / 2.0;
    const double phase = std::abs(s.imag()) * upper + kPi * std::sin(2.0 * d) * std::exp(2.0 * live);
    QuadratureSpec spec;
    spec.panel_count = std::max(8, static_cast<int>(std::ceil(phase / 4.0)));
    spec.target_rel_tol = 1e-13;
    spec.target_abs_tol = tol * 0.25;

    EvalResult rp = integrate_panels(h_plus, 0.0, upper, spec);
    EvalResult rm = integrate_panels(h_minus, 0.0, upper, spec);

    const Complex e_sd = std::exp(Complex(0.0, d) * s);
    const Complex e_sad = std::exp(Complex(0.0, d) * (s - alpha));
    EvalResult out;
    out.value = e_sad / (s - alpha) - e_sd / s + e_sd * rp.value + e_sad * rm.value;
    out.abs_err_est = std::abs(e_sd) * rp.abs_err_est + std::abs(e_sad) * rm.abs_err_est;
    out.nodes = rp.nodes + rm.nodes;
    return out;
}

} // namespace

EvalResult z_alpha_full(Complex s, double alpha, const ZEvalConfig& cfg) {
    if (!(alpha > 0.0)) throw DomainError("alpha_range", "alpha must be positive");
    const double guard = cfg.pole_guard_radius;
    if (std::abs(s) <= guard || std::abs(s - Complex(alpha, 0.0)) <= guard) {
        throw DomainError("pole_guard", "s within the guard radius of a pole of Z_alpha");
    }
    const double tol = resolve_tol(cfg);
    if (std::abs(s.imag()) <= kRotateThreshold) {
        return z_alpha_plain(s, alpha, tol, cfg.t_cutoff);
    }
    if (s.imag() > 0.0) return z_alpha_rotated(s, alpha, tol);
    EvalResult r = z_alpha_rotated(std::conj(s), alpha, tol);
    r.value = std::conj(r.value);
    return r;
}

Complex z_alpha(Complex s, double alpha, const ZEvalConfig& cfg) {
    return z_alpha_full(s, alpha, cfg).value;
}

Complex zeta_star(Complex s, const ZEvalConfig& cfg) { return z_alpha(s, 1.0, cfg); }

EvalResult z_alpha_chi_full(Complex s, double alpha, const RealCharacter& chi,
                            const ZEvalConfig& cfg) {
    if (!(alpha > 0.0)) throw DomainError("alpha_range", "alpha must be positive");
    require_positive(chi);
    const double tol = resolve_tol(cfg);
    const double q = chi.modulus();
    const double da = chi.delta() * alpha;
    const double sigma_max =
        std::max({std::abs(s.real()) + da, std::abs(alpha - s.real()) + da, 1.0});

    double upper = cfg.t_cutoff;
    if (upper <= 1.0) {
        upper = 2.0;
        while (-kPi * alpha * upper * upper / q + sigma_max * std::log(upper) +
                   alpha * std::log(2.0) >
               std::log(tol) - 5.0) {
            upper += 0.25;
            if (upper > 120.0) break;
        }
    }
    auto theta_pow = [&](double t) {
        return std::exp(alpha * std::log(theta_chi(t * t, chi)));
    };
    auto integrand = [&](double t) -> Complex {
        return theta_pow(t) * (cpow_pos(t, s + da - 1.0) + cpow_pos(t, alpha - s + da - 1.0));
    };
    QuadratureSpec spec;
    spec.panel_count = std::max(osc_panels(s.imag(), std::log(upper)),
                                static_cast<int>(upper));
    spec.target_abs_tol = tol * 0.5;
    return integrate_panels(integrand, 1.0, upper, spec);
}

Complex z_alpha_chi(Complex s, double alpha, const RealCharacter& chi,
                    const ZEvalConfig& cfg) {
    return z_alpha_chi_full(s, alpha, chi, cfg).value;
}

EvalResult z_alpha_f_full(Complex s, double alpha, const CuspForm& f,
                          const ZEvalConfig& cfg) {
    if (!(alpha > 0.0)) throw DomainError("alpha_range", "alpha must be positive");
    if (!f.fricke_self_dual()) {
        throw DomainError("self_duality_required", "Z_alpha(s,f) assumes Wf = f");
    }
    require_positive(f);
    const double tol = resolve_tol(cfg);
    const double rq = std::sqrt(double(f.level()));
    const double ka = f.weight() * alpha;
    const double sigma_max =
        std::max({std::abs(s.real()), std::abs(ka - s.real()), 1.0});

    double upper = cfg.t_cutoff;
    if (upper <= 1.0) {
        upper = 2.0;
        while (-2.0 * kPi * alpha * upper / rq + sigma_max * std::log(upper) >
               std::log(tol) - 5.0) {
            upper += 0.5;
            if (upper > 400.0) break;
        }
    }
    auto f_pow = [&](double y) {
        return std::exp(alpha * std::log(eval_cusp(y / rq, f)));
    };
    auto integrand = [&](double y) -> Complex {
        return f_pow(y) * (cpow_pos(y, s - 1.0) + cpow_pos(y, ka - s - 1.0));
    };
    QuadratureSpec spec;
    spec.panel_count = std::max(osc_panels(s.imag(), std::log(upper)),
                                static_cast<int>(upper));
    spec.target_abs_tol = tol * 0.5;
    return integrate_panels(integrand, 1.0, upper, spec);
}

Complex z_alpha_f(Complex s, double alpha, const CuspForm& f, const ZEvalConfig& cfg) {
    return z_alpha_f_full(s, alpha, f, cfg).value;
}

} // namespace besselzeta
