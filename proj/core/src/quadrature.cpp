#include "besselzeta/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "besselzeta/errors.hpp"

namespace besselzeta {

namespace {

GaussLegendreRule compute_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussLegendreRule& cached_rule(int order) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<const GaussLegendreRule>> cache;
    std::lock_guard lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, std::make_unique<const GaussLegendreRule>(
                                      compute_gauss_legendre(order)))
                 .first;
    }
    return *it->second;
}

Complex panel_pass(const std::function<Complex(double)>& f, double lower, double upper,
                   int panels, const GaussLegendreRule& rule) {
    const double h = (upper - lower) / panels;
    Complex total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lower + p * h;
        const double mid = a + 0.5 * h;
        Complex acc = 0.0;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            acc += rule.weights[j] * f(mid + 0.5 * h * rule.nodes[j]);
        }
        total += acc * (0.5 * h);
    }
    return total;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int order) {
    if (order < 1) throw DomainError("quadrature_order", "Gauss-Legendre order must be >= 1");
    return cached_rule(order);
}

EvalResult integrate_panels(const std::function<Complex(double)>& f, double lower,
                            double upper, const QuadratureSpec& spec) {
    if (!(upper > lower)) throw DomainError("quadrature_range", "upper must exceed lower");
    const GaussLegendreRule& rule = gauss_legendre(spec.nodes_per_panel);

    int panels = std::max(1, spec.panel_count);
    Complex prev = panel_pass(f, lower, upper, panels, rule);
    std::int64_t nodes = static_cast<std::int64_t>(panels) * spec.nodes_per_panel;

    for (int level = 0; level < spec.max_refinements; ++level) {
        panels *= 2;
        Complex cur = panel_pass(f, lower, upper, panels, rule);
        nodes += static_cast<std::int64_t>(panels) * spec.nodes_per_panel;
        double diff = std::abs(cur - prev);
        bool abs_ok = diff <= spec.target_abs_tol;
        bool rel_ok = spec.target_rel_tol > 0.0 && diff <= spec.target_rel_tol * std::abs(cur);
        if (abs_ok || rel_ok) {
            return EvalResult{cur, diff, 0, nodes};
        }
        prev = cur;
    }
    throw ConvergenceError("quadrature_stall",
                           "panel doubling failed to stabilize within the refinement budget");
}

EvalResult integrate_decaying(const std::function<Complex(double)>& f, double lower,
                              const QuadratureSpec& spec) {
    return integrate_panels(f, lower, spec.upper_cutoff, spec);
}

EvalResult integrate_tanh_sinh(const std::function<Complex(double)>& f, double a, double b,
                               double target_abs_tol, int max_level) {
    // x = c + r*tanh((pi/2) sinh u), trapezoid in u with halving step.
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    const double umax = 3.7;
    const double half_pi = 0.5 * std::numbers::pi;

    auto node_value = [&](double u) -> Complex {
        const double sh = std::sinh(u);
        const double ch = std::cosh(u);
        const double t = std::tanh(half_pi * sh);
        const double sech = 1.0 / std::cosh(half_pi * sh);
        const double w = half_pi * ch * sech * sech; // dx/du / r
        const double x = c + r * t;
        if (x <= a || x >= b) return 0.0; // node collapsed onto an endpoint
        return f(x) * (r * w);
    };

    double h = 0.5;
    Complex sum = node_value(0.0);
    for (double u = h; u <= umax; u += h) sum += node_value(u) + node_value(-u);
    Complex prev = sum * h;
    std::int64_t nodes = static_cast<std::int64_t>(2 * umax / h) + 1;

    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        Complex add = 0.0;
        for (double u = h; u <= umax; u += 2.0 * h) {
            add += node_value(u) + node_value(-u);
            nodes += 2;
        }
        Complex cur = prev * 0.5 + add * h;
        double diff = std::abs(cur - prev);
        if (diff <= target_abs_tol && level >= 3) {
            return EvalResult{cur, diff, 0, nodes};
        }
        prev = cur;
    }
    throw ConvergenceError("quadrature_stall",
                           "tanh-sinh refinement failed to reach the target tolerance");
}

} // namespace besselzeta
