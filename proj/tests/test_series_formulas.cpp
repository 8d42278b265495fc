#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "besselzeta/errors.hpp"
#include "besselzeta/oracles.hpp"
#include "besselzeta/series_formulas.hpp"
#include "besselzeta/zalpha.hpp"

using namespace besselzeta;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("riemann_series: zeta*(2) = pi/6 for several alphas") {
    for (double alpha : {0.5, 0.3}) {
        auto r = riemann_series({2.0, 0.0}, alpha, 1e-11);
        CHECK(std::abs(r.value - Complex(kPi / 6.0, 0.0)) < 1e-10);
        CHECK(r.terms > 0);
    }
}

TEST_CASE("riemann_series: zeta*(1/2) through the oracle") {
    // pi^{-1/4} Gamma(1/4) zeta(1/2)
    Complex expected = zeta_star_oracle({0.5, 0.0});
    CHECK(expected.real() == doctest::Approx(-3.9769662255065129).epsilon(1e-10));
    auto r = riemann_series({0.5, 0.0}, 0.5, 1e-11);
    CHECK(std::abs(r.value - expected) < 1e-9);
}

TEST_CASE("riemann_series: alpha independence") {
    Complex s(0.7, 3.0);
    auto a = riemann_series(s, 0.3, 1e-11);
    auto b = riemann_series(s, 0.5, 1e-11);
    CHECK(std::abs(a.value - b.value) <= 1e-9);
}

TEST_CASE("riemann_series: pole guard and alpha range") {
    CHECK_THROWS_AS(riemann_series({1.0, 0.0}, 0.5, 1e-10), DomainError);
    CHECK_THROWS_AS(riemann_series({0.0, 0.0}, 0.5, 1e-10), DomainError);
    CHECK_THROWS_AS(riemann_series({2.0, 0.0}, 1.5, 1e-10), DomainError);
}

TEST_CASE("divisor rearrangement agrees with the double sum") {
    for (auto [s, alpha] : {std::pair<Complex, double>{{2.0, 0.0}, 0.5},
                            std::pair<Complex, double>{{0.5, 10.0}, 0.25}}) {
        auto a = riemann_series(s, alpha, 1e-11);
        auto b = riemann_series_divisor(s, alpha, 1e-11);
        CHECK(std::abs(a.value - b.value) <= 1e-10);
    }
}

TEST_CASE("critical_line_form equals the general evaluator") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ts(0.2, 12.0);
    for (int i = 0; i < 10; ++i) {
        double t = ts(rng);
        auto a = critical_line_form(t, 1e-11);
        auto b = riemann_series({0.5, t}, 0.5, 1e-11);
        CHECK(std::abs(a.value - b.value) <= 1e-9);
        // output at -t conjugates (real value: equal)
        auto c = critical_line_form(-t, 1e-11);
        CHECK(std::abs(c.value - std::conj(a.value)) <= 1e-10);
    }
}

TEST_CASE("critical_line_form at t = 0 evaluates the limit") {
    auto r = critical_line_form(0.0, 1e-11);
    Complex expected = zeta_star_oracle({0.5, 0.0});
    CHECK(std::abs(r.value - expected) < 1e-7);
}

TEST_CASE("zeta_fig_approx: identity-level agreement at the budget cutoff") {
    for (double t : {0.05, 1.0, 5.0, 14.134725, 20.0, 33.7, 40.0}) {
        auto r = zeta_fig_approx(t, -1, 1e-9);
        Complex zeta = zeta_em(Complex(0.5, t));
        CHECK(std::abs(r.value - zeta) <= 1e-7);
    }
}

TEST_CASE("zeta_fig_approx: small magnitude at the first zero") {
    auto r = zeta_fig_approx(14.134725, -1, 1e-9);
    CHECK(std::abs(r.value) <= 1e-6);
}

TEST_CASE("zeta_fig_approx: t = 0 rejected, conjugation at -t") {
    CHECK_THROWS_AS(zeta_fig_approx(0.0, 0, 1e-9), DomainError);
    auto p = zeta_fig_approx(7.3, 3, 1e-9);
    auto m = zeta_fig_approx(-7.3, 3, 1e-9);
    CHECK(std::abs(m.value - std::conj(p.value)) < 1e-12);
}

TEST_CASE("zeta_fig_approx: n_max = 0 keeps only the two leading terms") {
    // refining the truncation must bring the value closer to zeta
    double t = 9.4;
    Complex zeta = zeta_em(Complex(0.5, t));
    double e0 = std::abs(zeta_fig_approx(t, 0, 1e-9).value - zeta);
    double e3 = std::abs(zeta_fig_approx(t, 3, 1e-9).value - zeta);
    double eb = std::abs(zeta_fig_approx(t, -1, 1e-9).value - zeta);
    CHECK(e3 < e0);
    CHECK(eb < 1e-7);
}

TEST_CASE("dirichlet_series: L*(1,chi4) = 1") {
    auto r = dirichlet_series({1.0, 0.0}, 0.5, RealCharacter::mod4(), 1e-11);
    CHECK(std::abs(r.value - Complex(1.0, 0.0)) <= 1e-9);
}

TEST_CASE("dirichlet_series: alpha independence and functional equation") {
    const auto& chi4 = RealCharacter::mod4();
    auto a = dirichlet_series({0.5, 0.0}, 0.3, chi4, 1e-11);
    auto b = dirichlet_series({0.5, 0.0}, 0.5, chi4, 1e-11);
    CHECK(std::abs(a.value - b.value) <= 1e-9);

    Complex s(0.3, 1.0);
    auto lhs = dirichlet_series(s, 0.5, chi4, 1e-11);
    auto rhs = dirichlet_series(1.0 - s, 0.5, chi4, 1e-11);
    CHECK(std::abs(lhs.value - rhs.value) <= 1e-9);
}

TEST_CASE("dirichlet_series: oracle identity for the bundled characters") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> re(-1.0, 2.0), im(-8.0, 8.0);
    for (const RealCharacter* chi :
         {&RealCharacter::mod3(), &RealCharacter::mod4(), &RealCharacter::mod8()}) {
        for (int i = 0; i < 3; ++i) {
            Complex s(re(rng), im(rng));
            auto series = dirichlet_series(s, 0.5, *chi, 1e-10);
            Complex oracle = dirichlet_completion(s, *chi) * dirichlet_l_oracle(s, *chi);
            CHECK(std::abs(series.value - oracle) <= 1e-8);
        }
    }
}

TEST_CASE("dirichlet special values for chi4") {
    auto sv = dirichlet_special_values(RealCharacter::mod4(), 1e-11);
    CHECK(sv.edge == doctest::Approx(kPi / 4.0).epsilon(1e-9));
    double center_oracle = dirichlet_l_oracle({0.5, 0.0}, RealCharacter::mod4()).real();
    CHECK(sv.center == doctest::Approx(center_oracle).epsilon(1e-9));
    // consistency with the full evaluator through the completion factors
    auto full = dirichlet_series({1.0, 0.0}, 0.5, RealCharacter::mod4(), 1e-11);
    Complex via = full.value / dirichlet_completion({1.0, 0.0}, RealCharacter::mod4());
    CHECK(std::abs(via - Complex(sv.edge, 0.0)) <= 1e-9);
}

TEST_CASE("cuspform_series: equals Z_1(s,Delta) = L*(s,Delta)") {
    const auto& dd = CuspForm::delta();
    auto series = cuspform_series({6.0, 0.0}, 0.5, dd, 1e-10);
    Complex direct = z_alpha_f({6.0, 0.0}, 1.0, dd);
    CHECK(std::abs(series.value - direct) <= 1e-8);
    Complex oracle = cuspform_l_oracle({6.0, 0.0}, dd);
    CHECK(std::abs(series.value - oracle) <= 1e-8);
}

TEST_CASE("cuspform_series: alpha independence at the edge") {
    const auto& dd = CuspForm::delta();
    auto a = cuspform_series({6.5, 0.0}, 0.4, dd, 1e-10);
    auto b = cuspform_series({6.5, 0.0}, 0.5, dd, 1e-10);
    CHECK(std::abs(a.value - b.value) <= 1e-9);
}

TEST_CASE("cuspform_series: functional-equation witness about s = 6") {
    const auto& dd = CuspForm::delta();
    auto a = cuspform_series({8.0, 0.0}, 0.5, dd, 1e-10);
    auto b = cuspform_series({4.0, 0.0}, 0.5, dd, 1e-10);
    CHECK(std::abs(a.value - b.value) <= 1e-9);
}

TEST_CASE("cuspform special values against the oracle") {
    const auto& dd = CuspForm::delta();
    auto sv = cuspform_special_values(dd, 1e-10);
    Complex edge_oracle =
        cuspform_l_oracle({6.5, 0.0}, dd) / cuspform_completion({6.5, 0.0}, dd);
    Complex center_oracle =
        cuspform_l_oracle({6.0, 0.0}, dd) / cuspform_completion({6.0, 0.0}, dd);
    CHECK(std::abs(sv.edge - edge_oracle.real()) <= 1e-8);
    CHECK(std::abs(sv.center - center_oracle.real()) <= 1e-8);
    // the literal edge formula equals the theorem evaluator at s = 13/2
    auto series = cuspform_series({6.5, 0.0}, 0.5, dd, 1e-10);
    Complex via = series.value / cuspform_completion({6.5, 0.0}, dd);
    CHECK(std::abs(via.real() - sv.edge) <= 1e-8);
}

TEST_CASE("conjugate symmetry of the evaluators") {
    Complex s(0.8, 4.0);
    auto a = riemann_series(s, 0.5, 1e-11);
    auto b = riemann_series(std::conj(s), 0.5, 1e-11);
    CHECK(std::abs(b.value - std::conj(a.value)) < 1e-11);

    auto c = dirichlet_series(s, 0.5, RealCharacter::mod3(), 1e-10);
    auto d = dirichlet_series(std::conj(s), 0.5, RealCharacter::mod3(), 1e-10);
    CHECK(std::abs(d.value - std::conj(c.value)) < 1e-10);

    const auto& dd = CuspForm::delta();
    auto e = cuspform_series({6.0, 2.0}, 0.5, dd, 1e-10);
    auto f = cuspform_series({6.0, -2.0}, 0.5, dd, 1e-10);
    CHECK(std::abs(f.value - std::conj(e.value)) < 1e-10);
}

TEST_CASE("budgets: monotone, convergent, sound") {
    auto b4 = make_budget(SeriesFamily::Theta, {0.5, 20.0}, 1e-4);
    auto b10 = make_budget(SeriesFamily::Theta, {0.5, 20.0}, 1e-10);
    CHECK(b4.mn_cutoff < b10.mn_cutoff); // tighter tolerance keeps more terms
    CHECK(b4.est_tail <= 1e-4);
    CHECK(b10.est_tail <= 1e-10);
    // theta budget at tol 1e-10 lands in the stated 35..45 window
    CHECK(b10.mn_cutoff > 30.0);
    CHECK(b10.mn_cutoff < 50.0);

    // doubling the cutoff moves the value by less than the reported tail
    auto base = riemann_series({2.0, 0.0}, 0.5, 1e-10);
    auto finer = riemann_series({2.0, 0.0}, 0.5, 1e-13);
    CHECK(std::abs(base.value - finer.value) <= std::max(base.abs_err_est, 1e-12));
    CHECK(std::abs(base.value - finer.value) < 1e-11);
}

TEST_CASE("fault sensitivity: perturbing c_{1/2}(2) breaks the identity") {
    Complex s(2.0, 0.0);
    const CoeffStream& ca = theta_stream_cached(0.5);
    auto good = riemann_series_with(s, ca, ca, 1e-12);
    auto bad = riemann_series_with(s, ca.perturbed(2, 1e-6), ca, 1e-12);
    Complex truth = zeta_star_oracle(s);
    double rg = std::abs(good.value - truth);
    double rb = std::abs(bad.value - truth);
    CHECK(rg < 5e-12);
    // the fault shifts the double sum by ~1e-6 x the K-weights of the m=2
    // row and column, well clear of the healthy residual
    CHECK(rb > 1e-11);
    CHECK(rb > 5.0 * rg);
}
