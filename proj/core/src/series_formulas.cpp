#include "besselzeta/series_formulas.hpp"

#include <cmath>
#include <numbers>

#include "besselzeta/errors.hpp"
#include "besselzeta/special_functions.hpp"
#include "besselzeta/theta.hpp"
#include "besselzeta/zalpha.hpp"
#include "complex_ext.hpp"

namespace besselzeta {

namespace {

constexpr double kPi = std::numbers::pi;
using detail::cpow_pos;

double resolve(double tol, double fallback) { return tol > 0.0 ? tol : fallback; }

// solve X - p ln X = ln(C / tol) by fixed point iteration
double solve_cutoff(double coeff_constant, double poly_order, double tol) {
    double rhs = std::log(std::max(coeff_constant, 1e-300) / tol);
    double x = std::max(8.0, rhs + poly_order + 5.0);
    for (int i = 0; i < 40; ++i) {
        double nx = rhs + poly_order * std::log(x);
        nx = std::max(nx, 8.0);
        if (std::abs(nx - x) < 1e-9) {
            x = nx;
            break;
        }
        x = nx;
    }
    return x;
}

void check_alpha_open_unit(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("alpha_range", "alpha must lie in (0,1)");
    }
}

struct PairSumSpec {
    double scale = 2.0 * kPi; // K argument = scale * sqrt((m+off_a)(n+off_b))
    double off_a = 0.0;
    double off_b = 0.0;
    std::size_t first_index = 1; // theta sums start at 1, chi/f sums at 0
};

// shared double-sum core: sum ca(m) cb(n) ((n+off_b)/(m+off_a))^{nu/2} K_nu(arg)
EvalResult pair_sum(const CoeffStream& ca, const CoeffStream& cb, Complex nu,
                    const PairSumSpec& ps, const TruncationBudget& budget, double tol) {
    const double max_arg = budget.mn_cutoff;
    const double prod_cap = (max_arg / ps.scale) * (max_arg / ps.scale);

    // count terms first to split the bessel tolerance fairly
    std::int64_t count = 0;
    for (std::size_t m = ps.first_index;; ++m) {
        double ma = double(m) + ps.off_a;
        double nb0 = double(ps.first_index) + ps.off_b;
        if (ma * nb0 > prod_cap) break;
        for (std::size_t n = ps.first_index; ma * (double(n) + ps.off_b) <= prod_cap; ++n) {
            ++count;
        }
    }
    if (count == 0) return EvalResult{Complex(0.0, 0.0), budget.est_tail, 0, 0};
    const double bessel_tol = std::max(tol / (4.0 * double(count)), 1e-15);

    EvalResult out;
    for (std::size_t m = ps.first_index;; ++m) {
        double ma = double(m) + ps.off_a;
        if (ma * (double(ps.first_index) + ps.off_b) > prod_cap) break;
        double cam = ca.coeff(m);
        for (std::size_t n = ps.first_index;; ++n) {
            double nb = double(n) + ps.off_b;
            if (ma * nb > prod_cap) break;
            double cbn = cb.coeff(n);
            if (cam == 0.0 || cbn == 0.0) continue;
            double arg = ps.scale * std::sqrt(ma * nb);
            Complex kv = bessel_k(nu, arg, bessel_tol);
            out.value += cam * cbn * cpow_pos(nb / ma, nu / 2.0) * kv;
            ++out.terms;
        }
    }
    out.abs_err_est = budget.est_tail + double(count) * bessel_tol;
    return out;
}

} // namespace

TruncationBudget make_budget_for(double coeff_constant, double poly_order, double tol) {
    TruncationBudget b;
    // solve against tol/2 so the reported bound sits strictly under tol
    b.mn_cutoff = solve_cutoff(coeff_constant, poly_order, 0.5 * tol);
    b.est_tail = coeff_constant * std::pow(b.mn_cutoff, poly_order) * std::exp(-b.mn_cutoff);
    return b;
}

TruncationBudget make_budget(SeriesFamily family, Complex s, double tol) {
    if (!(tol > 0.0)) throw DomainError("tol_range", "tolerance must be positive");
    // default growth profile: both streams at alpha = 1/2, scaled 10x
    double p_coeff = 0.5 / 4.0 + 0.5;
    double growth = 2.0;
    switch (family) {
        case SeriesFamily::Theta: growth = 2.0; break;
        case SeriesFamily::Chi: growth = 4.0; break;
        case SeriesFamily::CuspForm: growth = 60.0; break;
    }
    double poly = 2.0 * p_coeff + std::abs(s.real()) / 2.0 + 3.0;
    return make_budget_for(growth * 10.0, poly, tol);
}

EvalResult riemann_series_with(Complex s, const CoeffStream& ca, const CoeffStream& cb,
                               double tol) {
    const double alpha = ca.alpha();
    const double beta = cb.alpha();
    const Complex nu = (s - beta) / 2.0;

    const double pa = alpha / 4.0 + 0.5, pb = beta / 4.0 + 0.5;
    const double growth = ca.growth_constant(pa) * cb.growth_constant(pb) * 10.0;
    const double poly = pa + pb + std::abs(nu.real()) + 3.0;
    TruncationBudget budget = make_budget_for(growth, poly, tol);

    ZEvalConfig zc;
    zc.tol = tol * 0.1;
    EvalResult zb = z_alpha_full(s, beta, zc);
    EvalResult za = z_alpha_full(1.0 - s, alpha, zc);

    EvalResult sum = pair_sum(ca, cb, nu, PairSumSpec{}, budget, tol);
    sum.value += zb.value + za.value;
    sum.abs_err_est += zb.abs_err_est + za.abs_err_est;
    sum.nodes += zb.nodes + za.nodes;
    return sum;
}

EvalResult riemann_series(Complex s, double alpha, double tol) {
    check_alpha_open_unit(alpha);
    tol = resolve(tol, 1e-10);
    if (std::abs(s) <= 1e-6 || std::abs(s - Complex(1.0, 0.0)) <= 1e-6) {
        throw DomainError("pole_guard", "s within the guard radius of a pole of zeta*");
    }
    const CoeffStream& ca = theta_stream_cached(alpha);
    const CoeffStream& cb = theta_stream_cached(1.0 - alpha);
    // at s = beta (and s = 1 - beta = alpha) the two Z terms sit on their
    // poles, which cancel in the pair; read the formula as the limit there
    double beta = 1.0 - alpha;
    if (std::min(std::abs(s - Complex(beta, 0.0)), std::abs(s - Complex(alpha, 0.0))) <=
        1e-5) {
        const Complex ih(0.0, 3e-6); // h^2 Laurent error ~1e-10, clear of the 1e-6 guard
        EvalResult plus = riemann_series_with(s + ih, ca, cb, tol);
        EvalResult minus = riemann_series_with(s - ih, ca, cb, tol);
        plus.value = 0.5 * (plus.value + minus.value);
        plus.abs_err_est += minus.abs_err_est + 1e-9;
        plus.nodes += minus.nodes;
        return plus;
    }
    return riemann_series_with(s, ca, cb, tol);
}

EvalResult riemann_series_divisor(Complex s, double alpha, double tol) {
    check_alpha_open_unit(alpha);
    tol = resolve(tol, 1e-10);
    if (std::abs(s) <= 1e-6 || std::abs(s - Complex(1.0, 0.0)) <= 1e-6) {
        throw DomainError("pole_guard", "s within the guard radius of a pole of zeta*");
    }
    const double beta = 1.0 - alpha;
    const Complex nu = (s - beta) / 2.0;
    const CoeffStream& ca = theta_stream_cached(alpha);
    const CoeffStream& cb = theta_stream_cached(beta);

    const double pa = alpha / 4.0 + 0.5, pb = beta / 4.0 + 0.5;
    const double growth = ca.growth_constant(pa) * cb.growth_constant(pb) * 10.0;
    TruncationBudget budget = make_budget_for(growth, pa + pb + std::abs(nu.real()) + 3.0, tol);

    const double n_cap = std::pow(budget.mn_cutoff / (2.0 * kPi), 2.0);
    const auto n_max = static_cast<std::size_t>(std::floor(n_cap));

    ZEvalConfig zc;
    zc.tol = tol * 0.1;
    EvalResult zb = z_alpha_full(s, beta, zc);
    EvalResult za = z_alpha_full(1.0 - s, alpha, zc);

    EvalResult out;
    const double bessel_tol = std::max(tol / (4.0 * double(std::max<std::size_t>(n_max, 1))), 1e-15);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Complex divisor = 0.0;
        for (std::size_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            std::size_t e = n / d;
            divisor += ca.coeff(d) * cb.coeff(e) * cpow_pos(double(d), -nu);
            if (d != e) divisor += ca.coeff(e) * cb.coeff(d) * cpow_pos(double(e), -nu);
        }
        if (divisor == Complex(0.0, 0.0)) continue;
        Complex kv = bessel_k(nu, 2.0 * kPi * std::sqrt(double(n)), bessel_tol);
        out.value += cpow_pos(double(n), nu / 2.0) * divisor * kv;
        ++out.terms;
    }
    out.value += zb.value + za.value;
    out.abs_err_est = budget.est_tail + double(n_max) * bessel_tol + zb.abs_err_est +
                      za.abs_err_est;
    out.nodes = zb.nodes + za.nodes;
    return out;
}

EvalResult critical_line_form(double t, double tol) {
    tol = resolve(tol, 1e-10);
    if (t == 0.0) {
        // the two Z values straddle the pole of Z_{1/2} at s = 1/2; the
        // symmetric average evaluates the limit
        const double h = 1e-5;
        EvalResult plus = critical_line_form(h, tol);
        EvalResult minus = critical_line_form(-h, tol);
        EvalResult out;
        out.value = 0.5 * (plus.value + minus.value);
        out.abs_err_est = plus.abs_err_est + minus.abs_err_est + 1e-9;
        out.terms = plus.terms;
        out.nodes = plus.nodes + minus.nodes;
        return out;
    }
    const Complex s(0.5, t);
    const CoeffStream& c = theta_stream_cached(0.5);

    const double p = 0.5 / 4.0 + 0.5;
    const double growth = c.growth_constant(p) * c.growth_constant(p) * 10.0;
    TruncationBudget budget = make_budget_for(growth, 2.0 * p + 3.0, tol);
    const double prod_cap = std::pow(budget.mn_cutoff / (2.0 * kPi), 2.0);

    ZEvalConfig zc;
    zc.tol = tol * 0.1;
    EvalResult z = z_alpha_full(s, 0.5, zc);

    EvalResult out;
    out.value = 2.0 * z.value.real();
    out.abs_err_est = 2.0 * z.abs_err_est + budget.est_tail;
    out.nodes = z.nodes;

    const double tau = t / 2.0;
    double acc = 0.0;
    for (std::size_t m = 1; double(m) * double(m) <= prod_cap; ++m) {
        double cm = c.coeff(m);
        if (cm != 0.0) {
            acc += cm * cm * bessel_k_imag(tau, 2.0 * kPi * double(m));
            ++out.terms;
        }
        for (std::size_t n = m + 1; double(m) * double(n) <= prod_cap; ++n) {
            double cn = c.coeff(n);
            if (cm == 0.0 || cn == 0.0) continue;
            double arg = 2.0 * kPi * std::sqrt(double(m) * double(n));
            acc += 2.0 * cm * cn * std::cos(t / 4.0 * std::log(double(n) / double(m))) *
                   bessel_k_imag(tau, arg);
            ++out.terms;
        }
    }
    out.value += acc;
    return out;
}

EvalResult zeta_fig_approx(double t, long long n_max, double tol) {
    tol = resolve(tol, 1e-9);
    if (t == 0.0) {
        throw DomainError("t_zero", "Gamma(it/2) factorization excludes t = 0");
    }
    if (t < 0.0) {
        EvalResult r = zeta_fig_approx(-t, n_max, tol);
        r.value = std::conj(r.value);
        return r;
    }
    const Complex s(0.5, t);
    const Complex quarter_half_it(0.25, t / 2.0);
    const Complex pref = std::exp(quarter_half_it * std::log(kPi)) /
                         complex_gamma(quarter_half_it);

    ZEvalConfig zc;
    zc.tol = 1e-13;
    EvalResult z1 = z_alpha_full(s, 0.5, zc);
    EvalResult z2 = z_alpha_full(Complex(0.0, t), 0.5, zc);

    // zeta_{1/2}(1/2+it) + pref * Z_{1/2}(it)
    Complex term12 = pref * (z1.value + z2.value); // Gamma(s/2) = Gamma(1/4+it/2) here
    const double amp = std::abs(pref);

    const CoeffStream& c = theta_stream_cached(0.5);
    std::int64_t cap = n_max;
    if (cap < 0) {
        const double p = 0.5 / 4.0 + 0.5;
        const double growth = c.growth_constant(p) * c.growth_constant(p) * 10.0 *
                              std::max(amp, 1.0);
        TruncationBudget budget = make_budget_for(growth, 2.0 * p + 4.0, tol);
        cap = static_cast<long long>(std::pow(budget.mn_cutoff / (2.0 * kPi), 2.0));
    }

    EvalResult out;
    const double tau = t / 2.0;
    Complex series = 0.0;
    for (long long n = 1; n <= cap; ++n) {
        Complex divisor = 0.0;
        for (long long d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            long long e = n / d;
            double cd = c.coeff(std::size_t(d)), ce = c.coeff(std::size_t(e));
            if (cd != 0.0 && ce != 0.0) {
                divisor += cd * ce * cpow_pos(double(d), Complex(0.0, -tau));
                if (d != e) divisor += ce * cd * cpow_pos(double(e), Complex(0.0, -tau));
            }
        }
        if (divisor == Complex(0.0, 0.0)) continue;
        double kv = bessel_k_imag(tau, 2.0 * kPi * std::sqrt(double(n)));
        series += cpow_pos(double(n), Complex(0.0, t / 4.0)) * divisor * kv;
        ++out.terms;
    }
    out.value = term12 + pref * series;
    out.abs_err_est = amp * (z1.abs_err_est + z2.abs_err_est) + tol;
    out.nodes = z1.nodes + z2.nodes;
    return out;
}

EvalResult dirichlet_series(Complex s, double alpha, const RealCharacter& chi, double tol) {
    check_alpha_open_unit(alpha);
    tol = resolve(tol, 1e-10);
    require_positive(chi);
    const double beta = 1.0 - alpha;
    const double delta = chi.delta();
    const Complex nu = (s - beta + delta * (alpha - beta)) / 2.0;

    CoeffStream ca = chi_coeff_stream(alpha, chi);
    CoeffStream cb = chi_coeff_stream(beta, chi);

    const double pa = alpha / 4.0 + 0.5, pb = beta / 4.0 + 0.5;
    const double growth = ca.growth_constant(pa) * cb.growth_constant(pb) * 10.0;
    TruncationBudget budget = make_budget_for(growth, pa + pb + std::abs(nu.real()) + 3.0, tol);

    PairSumSpec ps;
    ps.scale = 2.0 * kPi / chi.modulus();
    ps.off_a = alpha;
    ps.off_b = beta;
    ps.first_index = 0;

    EvalResult out = pair_sum(ca, cb, nu, ps, budget, tol);
    out.value *= 2.0;
    out.abs_err_est *= 2.0;
    return out;
}

SpecialValues dirichlet_special_values(const RealCharacter& chi, double tol) {
    tol = resolve(tol, 1e-10);
    require_positive(chi);
    const double q = chi.modulus();
    const double delta = chi.delta();
    CoeffStream c = chi_coeff_stream(0.5, chi);

    const double p = 0.5 / 4.0 + 0.5;
    const double growth = c.growth_constant(p) * c.growth_constant(p) * 10.0;
    TruncationBudget budget = make_budget_for(growth, 2.0 * p + 3.5, tol);
    const double prod_cap = std::pow(budget.mn_cutoff * q / kPi, 2.0);

    SpecialValues sv;
    double edge_sum = 0.0, center_sum = 0.0;
    const double bessel_tol = tol * 1e-3;
    for (std::size_t m = 0; double(2 * m + 1) <= prod_cap; ++m) {
        double cm = c.coeff(m);
        if (cm == 0.0 && m > 0) continue;
        for (std::size_t n = 0; double(2 * m + 1) * double(2 * n + 1) <= prod_cap; ++n) {
            double cn = c.coeff(n);
            if (cm == 0.0 || cn == 0.0) continue;
            double arg = kPi / q * std::sqrt(double(2 * m + 1) * double(2 * n + 1));
            edge_sum += cm * cn * std::pow(double(2 * n + 1) / double(2 * m + 1), 0.125) *
                        bessel_k(Complex(0.25, 0.0), arg, bessel_tol).real();
            center_sum += cm * cn * bessel_k_imag(0.0, arg);
            ++sv.terms;
        }
    }
    sv.edge = 2.0 * std::pow(kPi, delta) / std::pow(q, 0.5 + delta / 2.0) * edge_sum;
    sv.center = 2.0 * std::pow(kPi / q, (1.0 + 2.0 * delta) / 4.0) /
                complex_gamma(Complex(0.25 + delta / 2.0, 0.0)).real() * center_sum;
    return sv;
}

EvalResult cuspform_series(Complex s, double alpha, const CuspForm& f, double tol) {
    check_alpha_open_unit(alpha);
    tol = resolve(tol, 1e-10);
    if (f.weight() % 4 != 0) {
        throw DomainError("weight_mod4", "weight must be divisible by 4");
    }
    if (!f.fricke_self_dual()) {
        throw DomainError("self_duality_required", "cuspform_series assumes Wf = f");
    }
    require_positive(f);
    const double beta = 1.0 - alpha;
    const Complex nu = s - double(f.weight()) * beta;

    CoeffStream ca = cusp_coeff_stream(alpha, f);
    CoeffStream cb = cusp_coeff_stream(beta, f);

    // cusp coefficients grow polynomially of order ~ k/2 + 1/2
    const double pc = f.weight() / 2.0 + 0.5;
    const double growth = ca.growth_constant(pc, 60) * cb.growth_constant(pc, 60) * 10.0;
    TruncationBudget budget = make_budget_for(growth, 2.0 * pc + std::abs(nu.real()) + 3.0, tol);

    PairSumSpec ps;
    ps.scale = 4.0 * kPi / std::sqrt(double(f.level()));
    ps.off_a = alpha;
    ps.off_b = beta;
    ps.first_index = 0;

    EvalResult out = pair_sum(ca, cb, nu, ps, budget, tol);
    out.value *= 2.0;
    out.abs_err_est *= 2.0;
    return out;
}

SpecialValues cuspform_special_values(const CuspForm& f, double tol) {
    tol = resolve(tol, 1e-10);
    if (!f.fricke_self_dual()) {
        throw DomainError("self_duality_required", "corollary series assume Wf = f");
    }
    require_positive(f);
    const int k = f.weight();
    const double rq = std::sqrt(double(f.level()));
    CoeffStream c = cusp_coeff_stream(0.5, f);

    const double pc = k / 2.0 + 0.5;
    const double growth = c.growth_constant(pc, 60) * c.growth_constant(pc, 60) * 10.0;
    TruncationBudget budget = make_budget_for(growth, 2.0 * pc + 3.5, tol);
    const double prod_cap = std::pow(budget.mn_cutoff * rq / kPi, 2.0);

    SpecialValues sv;
    double edge_sum = 0.0, center_sum = 0.0;
    for (std::size_t m = 0; double(2 * m + 1) <= prod_cap; ++m) {
        double cm = c.coeff(m);
        for (std::size_t n = 0; double(2 * m + 1) * double(2 * n + 1) <= prod_cap; ++n) {
            double cn = c.coeff(n);
            if (cm == 0.0 || cn == 0.0) continue;
            double root = std::sqrt(double(2 * m + 1) * double(2 * n + 1));
            // K_{1/2} closed form folded in: e^{-(2 pi/sqrt q) root} / sqrt(2m+1)
            edge_sum += cm * cn * std::exp(-2.0 * kPi / rq * root) / std::sqrt(double(2 * m + 1));
            center_sum += cm * cn * bessel_k_imag(0.0, 2.0 * kPi / rq * root);
            ++sv.terms;
        }
    }
    const double gamma_edge = complex_gamma(Complex((k + 1) / 2.0, 0.0)).real();
    const double gamma_center = complex_gamma(Complex(k / 2.0, 0.0)).real();
    sv.edge = std::pow(2.0 * kPi, (k + 1) / 2.0) /
              (std::pow(double(f.level()), k / 4.0) * gamma_edge) * edge_sum;
    sv.center = 2.0 / gamma_center * std::pow(2.0 * kPi / rq, k / 2.0) * center_sum;
    return sv;
}

} // namespace besselzeta
