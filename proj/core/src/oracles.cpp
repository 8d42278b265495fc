#include "besselzeta/oracles.hpp"

#include <cmath>
#include <numbers>

#include "besselzeta/errors.hpp"
#include "besselzeta/quadrature.hpp"
#include "besselzeta/special_functions.hpp"
#include "besselzeta/theta.hpp"

namespace besselzeta {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2 .. B_30 as exact rationals rendered to double
constexpr double kBernoulli[15] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

Complex cpow_pos(double base, Complex w) {
    // base^w for base > 0, principal branch
    return std::exp(w * std::log(base));
}

// (e^w - 1)/w, stable near w = 0
Complex expm1_over(Complex w) {
    if (std::abs(w) < 1e-4) {
        return 1.0 + w * (0.5 + w * (1.0 / 6.0 + w * (1.0 / 24.0 + w / 120.0)));
    }
    return (std::exp(w) - 1.0) / w;
}

struct EMPlan {
    int n = 24;
    int m = 12;
};

EMPlan plan_for(Complex s, const EMConfig& cfg) {
    EMPlan p;
    p.m = std::min(cfg.bernoulli_order, 14);
    p.n = cfg.direct_terms > 0
              ? cfg.direct_terms
              : std::max(24, static_cast<int>(std::ceil(1.2 * std::abs(s.imag()))) + 12);
    return p;
}

// Core Euler-Maclaurin sum over (n+a)^{-s}; `pole_subtracted` replaces the
// (N+a)^{1-s}/(s-1) term by its pole-free counterpart.
Complex hurwitz_em(Complex s, double a, const EMConfig& cfg, bool pole_subtracted) {
    if (!(a > 0.0 && a <= 1.0)) throw DomainError("hurwitz_domain", "need 0 < a <= 1");
    if (s.real() <= -5.0 || std::abs(s.imag()) > 100.0) {
        throw DomainError("zeta_strip", "outside the supported strip");
    }
    if (!pole_subtracted && std::abs(s - Complex(1.0, 0.0)) < 1e-14) {
        throw DomainError("zeta_pole", "pole at s = 1");
    }
    EMPlan p = plan_for(s, cfg);

    Complex sum = 0.0;
    for (int n = 0; n < p.n; ++n) sum += cpow_pos(double(n) + a, -s);

    const double base = double(p.n) + a;
    const double log_base = std::log(base);

    if (pole_subtracted) {
        // (N+a)^{1-s}/(s-1) - 1/(s-1) = -log(N+a) * (e^{(1-s)L} - 1)/((1-s)L)
        Complex w = (1.0 - s) * log_base;
        sum += -log_base * expm1_over(w);
    } else {
        sum += cpow_pos(base, 1.0 - s) / (s - 1.0);
    }
    sum += 0.5 * cpow_pos(base, -s);

    // sum_j B_{2j}/(2j)! * s(s+1)...(s+2j-2) * (N+a)^{-s-2j+1}
    Complex poch = s;                  // rising product with 2j-1 factors
    double fact = 2.0;                 // (2j)!
    Complex tail_power = cpow_pos(base, -s - 1.0);
    for (int j = 1; j <= p.m; ++j) {
        if (j > 1) {
            poch *= (s + double(2 * j - 3)) * (s + double(2 * j - 2));
            fact *= double(2 * j) * double(2 * j - 1);
            tail_power /= base * base;
        }
        sum += kBernoulli[j - 1] / fact * poch * tail_power;
    }
    return sum;
}

} // namespace

Complex zeta_em(Complex s, EMConfig cfg) { return hurwitz_em(s, 1.0, cfg, false); }

Complex hurwitz_zeta(Complex s, double a, EMConfig cfg) {
    return hurwitz_em(s, a, cfg, false);
}

Complex hurwitz_zeta_minus_pole(Complex s, double a, EMConfig cfg) {
    return hurwitz_em(s, a, cfg, true);
}

Complex dirichlet_l_oracle(Complex s, const RealCharacter& chi) {
    const int q = chi.modulus();
    if (q == 1) return zeta_em(s);
    Complex sum = 0.0;
    for (int a = 1; a <= q; ++a) {
        int v = chi(a);
        if (v == 0) continue;
        // pole parts cancel because sum_a chi(a) = 0
        sum += double(v) * hurwitz_zeta_minus_pole(s, double(a) / q);
    }
    return std::exp(-s * std::log(double(q))) * sum;
}

Complex cuspform_l_oracle(Complex s, const CuspForm& f) {
    if (!f.fricke_self_dual()) {
        throw DomainError("self_duality_required", "oracle needs Wf = f");
    }
    require_positive(f);
    const double tol = default_abs_tol();
    const double rq = std::sqrt(double(f.level()));
    const int k = f.weight();
    const double sigma_max =
        std::max({std::abs(s.real()), std::abs(double(k) - s.real()), 1.0});

    // e^{-2 pi T / sqrt(q)} T^{sigma_max} < tol * e^{-5}
    double upper = 2.0;
    while (-2.0 * kPi * upper / rq + sigma_max * std::log(upper) >
           std::log(tol) - 5.0) {
        upper += 0.5;
        if (upper > 400.0) break;
    }

    auto g = [&](double y) { return eval_cusp(y / rq, f); };
    auto i1 = integrate_tanh_sinh(
        [&](double y) { return g(y) * std::exp((s - 1.0) * std::log(y)); }, 1.0, upper,
        tol * 0.5);
    auto i2 = integrate_tanh_sinh(
        [&](double y) { return g(y) * std::exp((double(k) - s - 1.0) * std::log(y)); }, 1.0,
        upper, tol * 0.5);
    return i1.value + i2.value;
}

Complex zeta_star_oracle(Complex s) {
    return std::exp(-s / 2.0 * std::log(kPi)) * complex_gamma(s / 2.0) * zeta_em(s);
}

Complex dirichlet_completion(Complex s, const RealCharacter& chi) {
    const double q = chi.modulus();
    const double d = chi.delta();
    Complex e = (s + d) / 2.0;
    return std::exp(e * std::log(q / kPi)) * complex_gamma(e);
}

Complex cuspform_completion(Complex s, const CuspForm& f) {
    return std::exp(s / 2.0 * std::log(double(f.level()))) *
           std::exp(-s * std::log(2.0 * kPi)) * complex_gamma(s);
}

} // namespace besselzeta
