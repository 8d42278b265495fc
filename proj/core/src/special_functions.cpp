#include "besselzeta/special_functions.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "besselzeta/errors.hpp"
#include "besselzeta/quadrature.hpp"

namespace besselzeta {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficient set for g = 607/128.
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex gamma_positive_half(Complex z) {
    // valid for Re(z) >= 1/2
    Complex acc = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) acc += kLanczosCoeff[k] / (z + double(k - 1));
    Complex t = z + (kLanczosG - 0.5);
    // combine exponents before exponentiating so |Gamma| near the overflow
    // threshold does not overflow in an intermediate
    Complex log_part = (z - 0.5) * std::log(t) - t;
    return std::sqrt(2.0 * kPi) * std::exp(log_part) * acc;
}

} // namespace

Complex complex_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw DomainError("gamma_pole", "gamma pole at non-positive integer");
    }
    Complex result;
    if (z.real() < 0.5) {
        Complex s = std::sin(kPi * z);
        if (s == Complex(0.0, 0.0)) {
            throw DomainError("gamma_pole", "gamma pole at non-positive integer");
        }
        result = kPi / (s * gamma_positive_half(1.0 - z));
    } else {
        result = gamma_positive_half(z);
    }
    if (!is_finite(result)) {
        throw DomainError("gamma_overflow", "|Gamma(z)| exceeds the representable range");
    }
    return result;
}

Complex bessel_k(Complex nu, double x, double abs_tol) {
    if (!(x > 0.0)) throw DomainError("bessel_domain", "bessel_k requires x > 0");
    if (std::abs(nu.real()) > kBesselMaxRe || std::abs(nu.imag()) > kBesselMaxIm) {
        throw DomainError("bessel_envelope", "order outside the supported envelope");
    }
    if (abs_tol <= 0.0) abs_tol = default_bessel_tol();

    // underflow: |K_nu(x)| <= sqrt(pi/2x) e^{-x} e^{|Im nu| pi/2}
    const double log_bound =
        0.5 * std::log(kPi / (2.0 * x)) - x + std::abs(nu.imag()) * kPi / 2.0;
    if (log_bound < std::log(DBL_MIN)) return Complex(0.0, 0.0);

    // cutoff U: x cosh U - |Re nu| U >= ln(1/tol) + 5
    const double lim = std::log(1.0 / abs_tol) + 5.0;
    const double a = std::abs(nu.real());
    double upper = 1.0;
    while (x * std::cosh(upper) - a * upper < lim && upper < 60.0) upper += 0.25;

    auto integrand = [&](double u) -> Complex {
        return std::exp(-x * std::cosh(u)) * std::cosh(nu * u);
    };

    // panel width keeps the cos(Im nu * u) phase change modest per panel
    const double osc = std::max(1.0, std::abs(nu.imag()));
    const double width = std::min(0.75, 6.0 / osc);
    QuadratureSpec spec;
    spec.panel_count = std::max(4, static_cast<int>(std::ceil(upper / width)));
    spec.nodes_per_panel = 16;
    spec.target_abs_tol = abs_tol * 0.5;
    spec.target_rel_tol = 1e-14; // floor for K values far above 1
    spec.upper_cutoff = upper;

    EvalResult r = integrate_decaying(integrand, 0.0, spec);
    if (!is_finite(r.value)) {
        throw DomainError("bessel_overflow", "K_nu(x) exceeds the representable range");
    }
    return r.value;
}

double bessel_k_imag(double tau, double x, double rel_tol) {
    if (!(x > 0.0)) throw DomainError("bessel_domain", "bessel_k_imag requires x > 0");
    tau = std::abs(tau); // K_{i tau} = K_{-i tau}
    if (tau > kBesselMaxIm) {
        throw DomainError("bessel_envelope", "order outside the supported envelope");
    }
    if (rel_tol <= 0.0) rel_tol = 1e-12;

    if (tau <= 0.9 * x) {
        // plain path: the value is ~ sqrt(pi/2x) e^{-x}, same scale as the
        // integrand, so an absolute target at that scale is a relative one
        double scale_log = 0.5 * std::log(kPi / (2.0 * x)) - x;
        if (scale_log < std::log(DBL_MIN) + 40.0) return 0.0;
        double abs_tol = 0.25 * rel_tol * std::exp(scale_log);
        return bessel_k(Complex(0.0, tau), x, abs_tol).real();
    }

    // shifted line u = r - ic with c = pi/2 - eps:
    //   K_{i tau}(x) = int_0^inf e^{-tau c - x cosh r cos c} cos(x sinh r sin c - tau r) dr
    const double eps = 0.3;
    const double c = kPi / 2.0 - eps;
    const double cos_c = std::sin(eps);
    const double sin_c = std::cos(eps);

    const double damp = tau * c;
    if (damp + x * cos_c > -std::log(DBL_MIN) - 20.0) return 0.0; // underflow

    const double lim = std::log(1.0 / rel_tol) + tau * eps + 12.0;
    double upper = 0.5;
    while (x * cos_c * (std::cosh(upper) - 1.0) < lim && upper < 40.0) upper += 0.25;

    auto integrand = [&](double r) -> Complex {
        double env = std::exp(-damp - x * std::cosh(r) * cos_c);
        return env * std::cos(x * std::sinh(r) * sin_c - tau * r);
    };

    // highest live frequency: |phi'| = |x cosh r sin_c - tau| on the region
    // where the envelope is alive
    const double live_cosh = std::min(std::cosh(upper), 1.0 + lim / (x * cos_c));
    const double freq = x * live_cosh * sin_c + tau;
    const double width = std::min(0.5, 6.0 / std::max(1.0, freq));
    QuadratureSpec spec;
    spec.panel_count = std::max(4, static_cast<int>(std::ceil(upper / width)));
    spec.nodes_per_panel = 16;
    spec.target_rel_tol = rel_tol * 0.5;
    spec.target_abs_tol = std::exp(-damp) * rel_tol * 1e-3; // fallback absolute floor

    EvalResult r = integrate_panels(integrand, 0.0, upper, spec);
    return r.value.real();
}

} // namespace besselzeta
