#include "besselzeta/eisenstein.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "besselzeta/errors.hpp"
#include "besselzeta/power_series.hpp"
#include "besselzeta/quadrature.hpp"
#include "besselzeta/series_formulas.hpp"
#include "besselzeta/special_functions.hpp"
#include "besselzeta/theta.hpp"
#include "besselzeta/zalpha.hpp"
#include "complex_ext.hpp"

namespace besselzeta {

namespace {

constexpr double kPi = std::numbers::pi;
using detail::cpow_pos;

// theta(y^2 t^2)^a theta(y^-2 t^2)^b - 1 without cancellation
double product_pow_m1(double t, double y, double a, double b) {
    double l1 = std::log1p(theta0_minus1(y * y * t * t));
    double l2 = std::log1p(theta0_minus1(t * t / (y * y)));
    return std::expm1(a * l1 + b * l2);
}

// two-level Richardson on the symmetric averages of g(h), g(-h); the odd
// Laurent terms cancel in the average, so the error is O(h0^6)
double richardson_sym(const std::function<double(double)>& g, double h0, double* residual) {
    auto avg = [&](double h) { return 0.5 * (g(h) + g(-h)); };
    double a1 = avg(h0);
    double a2 = avg(h0 / 2.0);
    double a3 = avg(h0 / 4.0);
    double b1 = (4.0 * a2 - a1) / 3.0;
    double b2 = (4.0 * a3 - a2) / 3.0;
    double c = (16.0 * b2 - b1) / 15.0;
    if (residual) *residual = std::abs(c - b2);
    return c;
}

} // namespace

EvalResult e_integral(const EisensteinPoint& p, double tol) {
    if (!(p.y > 0.0)) throw DomainError("y_range", "y must be positive");
    if (!(p.alpha > 0.0) || !(p.beta > 0.0)) {
        throw DomainError("alpha_range", "alpha, beta must be positive");
    }
    const Complex s = p.s;
    const double ab = p.alpha + p.beta;
    if (std::abs(s) <= 1e-6 || std::abs(s - Complex(ab, 0.0)) <= 1e-6) {
        throw DomainError("pole_guard", "s within the guard radius of a pole of E");
    }

    // slowest factor: theta^a theta^b - 1 ~ 2a e^{-pi y^2 t^2} + 2b e^{-pi t^2/y^2}
    const double decay = kPi * std::min(p.y * p.y, 1.0 / (p.y * p.y));
    const double sigma_max = std::max({std::abs(s.real()), std::abs(ab - s.real()), 1.0});
    double upper = 2.0;
    while (-decay * upper * upper + sigma_max * std::log(upper) > std::log(tol) - 6.0) {
        upper += 0.25;
        if (upper > 80.0) break;
    }

    auto i1 = [&](double t) -> Complex {
        return product_pow_m1(t, p.y, p.alpha, p.beta) * cpow_pos(t, s - 1.0);
    };
    auto i2 = [&](double t) -> Complex {
        return product_pow_m1(t, 1.0 / p.y, p.alpha, p.beta) * cpow_pos(t, ab - s - 1.0);
    };
    QuadratureSpec spec;
    spec.panel_count =
        std::max(8, static_cast<int>(std::ceil(std::abs(s.imag()) * std::log(upper) / 4.0)) + 4);
    spec.target_abs_tol = tol * 0.25;

    EvalResult r1 = integrate_panels(i1, 1.0, upper, spec);
    EvalResult r2 = integrate_panels(i2, 1.0, upper, spec);

    const double ypow = std::pow(p.y, p.beta - p.alpha);
    EvalResult out;
    out.value = ypow / (s - ab) - 1.0 / s + r1.value + ypow * r2.value;
    out.abs_err_est = r1.abs_err_est + ypow * r2.abs_err_est;
    out.nodes = r1.nodes + r2.nodes;
    return out;
}

EvalResult e_expansion(const EisensteinPoint& p, double tol) {
    if (!(p.y > 0.0)) throw DomainError("y_range", "y must be positive");
    const Complex s = p.s;
    const double ab = p.alpha + p.beta;
    if (std::abs(s) <= 1e-6 || std::abs(s - Complex(ab, 0.0)) <= 1e-6) {
        throw DomainError("pole_guard", "s within the guard radius of a pole of E");
    }
    const Complex nu = (s - p.beta) / 2.0;
    const CoeffStream& ca = theta_stream_cached(p.alpha);
    const CoeffStream& cb = theta_stream_cached(p.beta);

    ZEvalConfig zc;
    zc.tol = tol * 0.1;
    EvalResult zb = z_alpha_full(s, p.beta, zc);
    EvalResult za = z_alpha_full(s - p.beta, p.alpha, zc);

    const double pa = p.alpha / 4.0 + 0.5, pb = p.beta / 4.0 + 0.5;
    const double growth = ca.growth_constant(pa) * cb.growth_constant(pb) * 10.0;
    const double scale = 2.0 * kPi * p.y * p.y;
    // the same scalar cutoff applies with X = 2 pi y^2 sqrt(mn)
    TruncationBudget budget =
        make_budget_for(growth, pa + pb + std::abs(nu.real()) + 3.0, tol);
    const double prod_cap = std::pow(budget.mn_cutoff / scale, 2.0);

    std::int64_t count = 0;
    for (std::size_t m = 1; double(m) <= prod_cap; ++m) {
        for (std::size_t n = 1; double(m) * double(n) <= prod_cap; ++n) ++count;
    }
    const double bessel_tol =
        std::max(tol / (4.0 * double(std::max<std::int64_t>(count, 1))), 1e-15);

    EvalResult out;
    for (std::size_t m = 1; double(m) <= prod_cap; ++m) {
        double cam = ca.coeff(m);
        if (cam == 0.0) continue;
        for (std::size_t n = 1; double(m) * double(n) <= prod_cap; ++n) {
            double cbn = cb.coeff(n);
            if (cbn == 0.0) continue;
            double arg = scale * std::sqrt(double(m) * double(n));
            out.value += cam * cbn * cpow_pos(double(n) / double(m), nu / 2.0) *
                         bessel_k(nu, arg, bessel_tol);
            ++out.terms;
        }
    }
    out.value = std::pow(p.y, p.beta) * out.value + zb.value * cpow_pos(p.y, s) +
                za.value * cpow_pos(p.y, 2.0 * p.beta - s);
    out.abs_err_est = budget.est_tail + double(count) * bessel_tol +
                      std::abs(cpow_pos(p.y, s)) * zb.abs_err_est +
                      std::abs(cpow_pos(p.y, 2.0 * p.beta - s)) * za.abs_err_est;
    out.nodes = zb.nodes + za.nodes;
    return out;
}

GammaAlphaPaths gamma_alpha_paths(double alpha, double tol) {
    if (!(alpha > 0.0)) throw DomainError("alpha_range", "alpha must be positive");
    GammaAlphaPaths paths;

    // pole-free route: the 1/(s-alpha) term cancels analytically in Eq-(311)
    // at s = alpha, leaving -1/alpha + int_1^inf (theta^alpha - 1)(t^alpha + 1) dt/t
    {
        double upper = 2.0;
        while (-kPi * upper * upper + (alpha + 1.0) * std::log(upper) > std::log(tol) - 6.0) {
            upper += 0.25;
        }
        QuadratureSpec spec;
        spec.panel_count = 8;
        spec.target_abs_tol = tol * 0.5;
        auto integrand = [&](double t) -> Complex {
            double g = std::expm1(alpha * std::log1p(theta0_minus1(t * t)));
            return g * (std::pow(t, alpha - 1.0) + 1.0 / t);
        };
        EvalResult r = integrate_panels(integrand, 1.0, upper, spec);
        paths.direct = -1.0 / alpha + r.value.real();
    }

    ZEvalConfig zc;
    zc.tol = tol * 0.01;
    auto g_pole = [&](double h) {
        return z_alpha(Complex(alpha + h, 0.0), alpha, zc).real() - 1.0 / h;
    };
    paths.richardson = richardson_sym(g_pole, 1e-2, &paths.residual);

    // reflected route: Z_alpha(w) + 1/w -> gamma_alpha as w -> 0 (functional equation)
    auto g_zero = [&](double h) {
        return z_alpha(Complex(h, 0.0), alpha, zc).real() + 1.0 / h;
    };
    double res2 = 0.0;
    paths.reflected = richardson_sym(g_zero, 1e-2, &res2);
    paths.residual = std::max(paths.residual, res2);
    return paths;
}

double gamma_alpha_const(double alpha, double tol) {
    return gamma_alpha_paths(alpha, tol).direct;
}

double kronecker_limit(double y, double alpha, double tol) {
    if (!(y > 0.0)) throw DomainError("y_range", "y must be positive");
    if (!(alpha > 0.0)) throw DomainError("alpha_range", "alpha must be positive");
    tol = tol > 0.0 ? tol : 1e-9;

    const double gamma_a = gamma_alpha_const(alpha, tol * 1e-2);
    ZEvalConfig zc;
    zc.tol = tol * 0.1;
    const double z2a = z_alpha(Complex(2.0 * alpha, 0.0), alpha, zc).real();

    const CoeffStream& c = theta_stream_cached(alpha);
    const double p = alpha / 4.0 + 0.5;
    const double growth = c.growth_constant(p) * c.growth_constant(p) * 10.0;
    TruncationBudget budget = make_budget_for(growth, 2.0 * p + alpha / 2.0 + 3.0, tol);
    const double scale = 2.0 * kPi * y * y;
    const double prod_cap = std::pow(budget.mn_cutoff / scale, 2.0);

    double series = 0.0;
    const double bessel_tol = tol * 1e-3;
    for (std::size_t m = 1; double(m) <= prod_cap; ++m) {
        double cam = c.coeff(m);
        if (cam == 0.0) continue;
        for (std::size_t n = 1; double(m) * double(n) <= prod_cap; ++n) {
            double can = c.coeff(n);
            if (can == 0.0) continue;
            double arg = scale * std::sqrt(double(m) * double(n));
            series += cam * can * std::pow(double(n) / double(m), alpha / 4.0) *
                      bessel_k(Complex(alpha / 2.0, 0.0), arg, bessel_tol).real();
        }
    }
    // the -log y term comes from the Laurent expansion of
    // Z_alpha(2a-s) y^{2a-s} at s -> 2a; it vanishes at y = 1
    return z2a * std::pow(y, 2.0 * alpha) + gamma_a - std::log(y) +
           std::pow(y, alpha) * series;
}

KroneckerPaths kronecker_limit_paths(double y, double alpha, double tol) {
    KroneckerPaths kp;
    kp.rhs = kronecker_limit(y, alpha, tol);
    auto g = [&](double h) {
        EisensteinPoint p;
        p.y = y;
        p.s = Complex(2.0 * alpha + h, 0.0);
        p.alpha = alpha;
        p.beta = alpha;
        return e_integral(p, tol * 1e-2).value.real() - 1.0 / h;
    };
    kp.extrapolated = richardson_sym(g, 1e-2, &kp.residual);
    return kp;
}

} // namespace besselzeta
