#include "besselzeta/theta.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "besselzeta/errors.hpp"

namespace besselzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLogCut = 46.0; // e^{-46} ~ 1e-20, below any tolerance in use

} // namespace

double theta0_minus1(double x) {
    if (!(x > 0.0)) throw DomainError("theta_domain", "theta0 requires x > 0");
    if (x >= 1.0) {
        double s = 0.0;
        for (int n = 1; kPi * n * n * x < kLogCut; ++n) s += std::exp(-kPi * n * n * x);
        return 2.0 * s;
    }
    // theta(x) = theta(1/x)/sqrt(x)
    double rx = std::sqrt(x);
    return (theta0_minus1(1.0 / x) + (1.0 - rx)) / rx;
}

double theta0(double x) { return 1.0 + theta0_minus1(x); }

Complex theta0_complex(Complex x) {
    if (!(x.real() > 0.0)) {
        throw DomainError("theta_domain", "theta0_complex requires Re(x) > 0");
    }
    Complex s = 0.0;
    for (int n = 1; kPi * n * n * x.real() < kLogCut; ++n) {
        s += std::exp(-kPi * double(n) * double(n) * x);
    }
    return 1.0 + 2.0 * s;
}

double theta_chi(double x, const RealCharacter& chi) {
    if (!(x > 0.0)) throw DomainError("theta_domain", "theta_chi requires x > 0");
    const int q = chi.modulus();
    const int delta = chi.delta();
    if (x < 1.0) {
        // theta(x,chi) = x^{-(1/2+delta)} theta(1/x,chi)
        return std::pow(x, -(0.5 + delta)) * theta_chi(1.0 / x, chi);
    }
    double s = 0.0;
    for (long long n = 1;; ++n) {
        double e = kPi * double(n) * double(n) * x / q;
        if (e - (delta ? std::log(double(n)) : 0.0) > kLogCut) break;
        int v = chi(n);
        if (v != 0) {
            double term = std::exp(-e);
            if (delta) term *= double(n);
            s += v * term;
        }
    }
    return 2.0 * s;
}

double eval_cusp(double y, const CuspForm& f, std::size_t n_terms) {
    if (!(y > 0.0)) throw DomainError("theta_domain", "eval_cusp requires y > 0");
    if (y < 1.0 && f.level() == 1 && f.fricke_self_dual()) {
        return std::pow(y, -double(f.weight())) * eval_cusp(1.0 / y, f, n_terms);
    }
    const double tol = default_abs_tol();
    std::size_t cutoff = n_terms;
    if (cutoff == 0) {
        // tail <= C N^{k/2} e^{-2 pi N y} / (1 - e^{-2 pi y})
        const double c = f.growth_constant();
        const double denom = -std::expm1(-2.0 * kPi * y);
        const double half_k = f.weight() / 2.0;
        std::size_t n = 1;
        while (true) {
            double log_tail = std::log(c) + half_k * std::log(double(n)) -
                              2.0 * kPi * double(n) * y - std::log(denom);
            if (log_tail < std::log(tol) - 2.0) break;
            ++n;
            if (n > 2'000'000) {
                throw ConvergenceError("truncation_failure",
                                       "tail bound unreachable at this y");
            }
        }
        cutoff = n;
    }
    if (cutoff > f.coeff_limit()) {
        throw ConvergenceError("truncation_failure",
                               "tail bound needs more coefficients than available");
    }
    double s = 0.0;
    for (std::size_t n = cutoff; n >= 1; --n) { // small terms first
        s += f.coeff(n) * std::exp(-2.0 * kPi * double(n) * y);
    }
    return s;
}

PositivityReport check_positivity(const std::function<double(double)>& f,
                                  const PositivityGrid& grid) {
    if (grid.x_min > 1e-3 || grid.x_max < 1e3) {
        throw DomainError("positivity_grid", "grid must cover [1e-3, 1e3]");
    }
    const double l0 = std::log(grid.x_min);
    const double l1 = std::log(grid.x_max);
    const int n = std::max(2, static_cast<int>(std::ceil((l1 - l0) / std::numbers::ln10 *
                                                         grid.points_per_decade)));
    PositivityReport rep;
    rep.grid_points = static_cast<std::size_t>(n + 1);
    double best = std::numeric_limits<double>::infinity();
    int best_i = 0;
    for (int i = 0; i <= n; ++i) {
        double x = std::exp(l0 + (l1 - l0) * i / n);
        double v = f(x);
        if (v < best) {
            best = v;
            best_i = i;
            rep.min_x = x;
        }
    }
    // golden-section refinement of min f(e^l) on the bracketing interval
    {
        const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
        double a = l0 + (l1 - l0) * std::max(0, best_i - 1) / n;
        double b = l0 + (l1 - l0) * std::min(n, best_i + 1) / n;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = f(std::exp(c)), fd = f(std::exp(d));
        for (int it = 0; it < 60 && (b - a) > 1e-10; ++it) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - gr * (b - a);
                fc = f(std::exp(c));
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + gr * (b - a);
                fd = f(std::exp(d));
            }
        }
        double lm = 0.5 * (a + b);
        double vm = f(std::exp(lm));
        if (vm < best) {
            best = vm;
            rep.min_x = std::exp(lm);
        }
    }
    rep.min_value = best;
    rep.positive = best > 0.0;
    return rep;
}

PositivityReport check_positivity(const RealCharacter& chi, const PositivityGrid& grid) {
    // sign of theta(x,chi) = sign of the normalized bracket
    // sum_{n>=1} n^delta chi(n) e^{-pi (n^2-1) x / q}: the positive factor
    // 2 e^{-pi x/q} drops out, which keeps the extremes of the grid away from
    // floating-point underflow; the functional equation reduces x < 1
    const int q = chi.modulus();
    const int delta = chi.delta();
    auto bracket = [&, q, delta](double x) {
        double xr = x < 1.0 ? 1.0 / x : x;
        double s = 0.0;
        for (long long n = 1;; ++n) {
            double e = kPi * double(n * n - 1) * xr / q;
            if (e - (delta ? std::log(double(n)) : 0.0) > kLogCut) break;
            int v = chi(n);
            if (v != 0) {
                double term = std::exp(-e);
                if (delta) term *= double(n);
                s += v * term;
            }
        }
        return s;
    };
    return check_positivity(bracket, grid);
}

PositivityReport check_positivity(const CuspForm& f, const PositivityGrid& grid) {
    // sign of f(iy) = sign of sum_{n>=1} a_f(n) e^{-2 pi (n-1) y}; Fricke
    // reduction for y < 1 on level-1 self-dual forms
    const bool reducible = f.level() == 1 && f.fricke_self_dual();
    const double c = f.growth_constant();
    const double half_k = f.weight() / 2.0;
    auto bracket = [&, reducible, c, half_k](double y) {
        double yr = (y < 1.0 && reducible) ? 1.0 / y : y;
        double s = 0.0;
        for (std::size_t n = 1;; ++n) {
            double e = 2.0 * kPi * double(n - 1) * yr;
            if (n > 1 && e - half_k * std::log(double(n)) - std::log(c) > kLogCut) break;
            if (n > f.coeff_limit()) {
                throw ConvergenceError("truncation_failure",
                                       "positivity grid needs more coefficients");
            }
            s += f.coeff(n) * std::exp(-e);
        }
        return s;
    };
    return check_positivity(bracket, grid);
}

namespace {

template <typename T>
const PositivityReport& memoized_gate(const T& target, const char* what) {
    PositivityMemo& memo = target.positivity_memo();
    std::lock_guard lock(memo.mutex);
    if (!memo.report) memo.report = check_positivity(target);
    if (!memo.report->positive) {
        throw DomainError("positivity_gate",
                          std::string(what) + " failed the positivity check near x = " +
                              std::to_string(memo.report->min_x));
    }
    return *memo.report;
}

} // namespace

const PositivityReport& require_positive(const RealCharacter& chi) {
    return memoized_gate(chi, "theta(x,chi)");
}

const PositivityReport& require_positive(const CuspForm& f) {
    return memoized_gate(f, "f(iy)");
}

} // namespace besselzeta
