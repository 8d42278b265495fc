#include "besselzeta/power_series.hpp"

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "besselzeta/errors.hpp"
#include "besselzeta/theta.hpp"
#include "stable_fill.hpp"

namespace besselzeta {

namespace {
constexpr double kPi = std::numbers::pi;
}

BaseSeries BaseSeries::dense(std::function<double(std::size_t)> coeff) {
    BaseSeries b;
    b.coeff = std::move(coeff);
    b.support_next = [](std::size_t j) { return j == 0 ? 1 : j; };
    return b;
}

BaseSeries BaseSeries::sparse(std::function<double(std::size_t)> coeff,
                              std::function<std::size_t(std::size_t)> support_next) {
    BaseSeries b;
    b.coeff = std::move(coeff);
    b.support_next = std::move(support_next);
    return b;
}

namespace {

// Minimal double-double arithmetic. The binomial expansion below cancels
// violently (contributions reach ~1e18 at index 64 for the theta base while
// the result is O(1)), so the oracle accumulates in roughly 32 digits.
struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD dd_two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD dd_add(DD a, DD b) {
    DD s = dd_two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    DD t = dd_two_sum(s.hi, s.lo);
    return t;
}

inline DD dd_mul(DD a, DD b) {
    double p = a.hi * b.hi;
    double e = std::fma(a.hi, b.hi, -p);
    e += a.hi * b.lo + a.lo * b.hi;
    return dd_two_sum(p, e);
}

inline DD dd_from(double x) { return {x, 0.0}; }

inline DD dd_div_d(DD a, double b) {
    double q0 = a.hi / b;
    double p = q0 * b;
    double e = std::fma(q0, b, -p);
    DD r = dd_add(a, DD{-p, -e});
    double q1 = (r.hi + r.lo) / b;
    return dd_two_sum(q0, q1);
}

} // namespace

struct CoeffStream::Impl {
    std::string q_meaning;
    double alpha = 0.0;
    double exponent_offset = 0.0;
    double prefactor = 1.0;
    BaseSeries base;
    std::size_t capacity = 0;

    std::vector<double> b;                 // b[0..capacity], written before publish
    std::vector<double> a;                 // dense base coefficients a[1..capacity]
    std::vector<std::size_t> support;      // sorted nonzero base indices <= capacity
    std::atomic<std::size_t> published{0}; // count of valid entries in b

    // one-shot analytic fill used beyond the stability range of the forward
    // recurrence (the recurrence's error kernel grows like e^{c sqrt(m)})
    std::function<std::vector<double>(std::size_t)> stable_fill;

    // highest index the double-double recurrence is trusted for (family
    // dependent, see run_recurrence_dd); 0 disables it
    std::size_t dd_limit = 0;

    std::mutex extend_mutex;

    void run_recurrence(std::vector<double>& out, std::size_t from, std::size_t to) const {
        for (std::size_t m = from; m <= to; ++m) {
            double acc = 0.0;
            for (std::size_t j : support) {
                if (j > m) break;
                acc += (double(j) * (alpha + 1.0) - double(m)) * a[j] * out[m - j];
            }
            out[m] = acc / double(m);
        }
    }

    // Double-double run of the same recurrence. Its rounding errors grow
    // like e^{c sqrt(m)} with family-dependent c (measured: ~2.3 for the
    // theta base, ~3.5 for the chi brackets), so 32 digits keep full double
    // accuracy through the per-family dd_limit set by the factories.
    std::vector<double> run_recurrence_dd(std::size_t to) const {
        std::vector<DD> bb(to + 1, DD{});
        bb[0] = dd_from(1.0);
        const DD alpha_p1 = dd_two_sum(alpha, 1.0);
        for (std::size_t m = 1; m <= to; ++m) {
            DD acc{};
            for (std::size_t j : support) {
                if (j > m) break;
                DD f = dd_add(dd_mul(alpha_p1, dd_from(double(j))), dd_from(-double(m)));
                f = dd_mul(f, dd_from(a[j]));
                acc = dd_add(acc, dd_mul(f, bb[m - j]));
            }
            bb[m] = dd_div_d(acc, double(m));
        }
        std::vector<double> out(to + 1, 0.0);
        for (std::size_t m = 0; m <= to; ++m) out[m] = bb[m].hi + bb[m].lo;
        return out;
    }

    // exact truncated convolution power for integer alpha (stable, and exact
    // while the values stay below 2^53)
    std::vector<double> convolution_power(std::size_t to) const {
        const auto e = static_cast<unsigned>(alpha);
        std::vector<double> acc(to + 1, 0.0), pw(a.begin(), a.begin() + to + 1);
        acc[0] = 1.0;
        pw[0] = 1.0;
        auto mul = [to](const std::vector<double>& x, const std::vector<double>& y) {
            std::vector<double> out(to + 1, 0.0);
            for (std::size_t i = 0; i <= to; ++i) {
                if (x[i] == 0.0) continue;
                for (std::size_t j = 0; i + j <= to; ++j) {
                    if (y[j] != 0.0) out[i + j] += x[i] * y[j];
                }
            }
            return out;
        };
        unsigned rest = e;
        while (rest > 0) {
            if (rest & 1u) acc = mul(acc, pw);
            rest >>= 1u;
            if (rest > 0) pw = mul(pw, pw);
        }
        return acc;
    }

    bool integer_alpha() const {
        return alpha == std::floor(alpha) && alpha >= 1.0 && alpha <= 64.0;
    }
};

CoeffStream::CoeffStream(std::string q_meaning, double alpha, double exponent_offset,
                         double prefactor, BaseSeries base, std::size_t cache_capacity) {
    if (!(alpha > 0.0)) throw DomainError("alpha_range", "alpha must be positive");
    auto impl = std::make_shared<Impl>();
    impl->q_meaning = std::move(q_meaning);
    impl->alpha = alpha;
    impl->exponent_offset = exponent_offset;
    impl->prefactor = prefactor;
    impl->base = std::move(base);
    impl->capacity = cache_capacity;
    impl->b.assign(cache_capacity + 1, 0.0);
    impl->a.assign(cache_capacity + 1, 0.0);
    for (std::size_t j = impl->base.support_next(1); j <= cache_capacity;
         j = impl->base.support_next(j + 1)) {
        double v = impl->base.coeff(j);
        if (v != 0.0) {
            impl->a[j] = v;
            impl->support.push_back(j);
        }
    }
    impl->b[0] = 1.0;
    impl->published.store(1, std::memory_order_release);
    impl_ = std::move(impl);
}

void CoeffStream::set_stable_fill(std::function<std::vector<double>(std::size_t)> fill) {
    impl_->stable_fill = std::move(fill);
}

void CoeffStream::set_dd_limit(std::size_t limit) { impl_->dd_limit = limit; }

double CoeffStream::alpha() const { return impl_->alpha; }
double CoeffStream::exponent_offset() const { return impl_->exponent_offset; }
double CoeffStream::prefactor() const { return impl_->prefactor; }
const std::string& CoeffStream::q_meaning() const { return impl_->q_meaning; }
std::size_t CoeffStream::capacity() const { return impl_->capacity; }
std::size_t CoeffStream::published() const {
    return impl_->published.load(std::memory_order_acquire);
}

void CoeffStream::extend(std::size_t n) const {
    if (n < impl_->published.load(std::memory_order_acquire)) return;
    if (n > impl_->capacity) {
        throw ConvergenceError("budget_exceeded",
                               "coefficient demand exceeds the stream cache depth");
    }
    std::lock_guard lock(impl_->extend_mutex);
    std::size_t have = impl_->published.load(std::memory_order_relaxed);
    if (n < have) return;

    const bool family =
        impl_->stable_fill || impl_->integer_alpha() || impl_->dd_limit > 0;
    if (!family) {
        // generic stream: the plain power rule, exactly as documented
        impl_->run_recurrence(impl_->b, have, n);
        impl_->published.store(n + 1, std::memory_order_release);
        return;
    }

    std::size_t target = std::min(impl_->capacity, std::max<std::size_t>(n, 64));
    std::vector<double> filled;
    if (impl_->integer_alpha()) {
        filled = impl_->convolution_power(target); // exact
    } else if (target <= impl_->dd_limit) {
        filled = impl_->run_recurrence_dd(target);
    } else if (impl_->stable_fill) {
        target = std::min(impl_->capacity, std::max<std::size_t>(target, 256));
        filled = impl_->stable_fill(target);
        std::size_t dd_to = std::min(impl_->dd_limit, target);
        if (dd_to >= 8) {
            // any branch mistake in the analytic fill shows up against the
            // double-double prefix immediately
            std::vector<double> ref = impl_->run_recurrence_dd(dd_to);
            std::size_t check_to = std::min<std::size_t>(48, dd_to);
            for (std::size_t m = 0; m <= check_to; ++m) {
                if (std::abs(ref[m] - filled[m]) >
                    1e-6 * std::max(1.0, std::abs(ref[m]))) {
                    throw ConvergenceError("branch",
                                           "analytic coefficient fill disagrees with "
                                           "the recurrence prefix");
                }
            }
            // the dd values are the more accurate ones on the prefix
            for (std::size_t m = 0; m <= dd_to; ++m) filled[m] = ref[m];
        }
    } else if (n <= impl_->dd_limit) {
        target = impl_->dd_limit;
        filled = impl_->run_recurrence_dd(target);
    } else {
        throw ConvergenceError("budget_exceeded",
                               "no stable evaluation path this deep into the stream");
    }

    for (std::size_t m = have; m <= target; ++m) impl_->b[m] = filled[m];
    impl_->published.store(target + 1, std::memory_order_release);
}

double CoeffStream::coeff(std::size_t m) const {
    if (m >= impl_->published.load(std::memory_order_acquire)) extend(m);
    double v = impl_->b[m];
    if (m == perturb_index_) v += perturb_delta_;
    return v;
}

CoeffStream CoeffStream::perturbed(std::size_t index, double delta) const {
    CoeffStream copy = *this;
    copy.perturb_index_ = index;
    copy.perturb_delta_ = delta;
    return copy;
}

double CoeffStream::growth_constant(double p, std::size_t limit) const {
    limit = std::min(limit, impl_->capacity);
    extend(limit);
    double c = 0.0;
    for (std::size_t m = 1; m <= limit; ++m) {
        c = std::max(c, std::abs(coeff(m)) / std::pow(double(m), p));
    }
    return std::max(c, 1e-300);
}

namespace {

std::size_t next_square_index(std::size_t j) {
    std::size_t r =
        static_cast<std::size_t>(std::ceil(std::sqrt(double(std::max<std::size_t>(j, 1)))));
    while (r * r < j) ++r;
    return r * r;
}

// ---- analytic fills -------------------------------------------------------
//
// Each family supplies exact bracket coefficients in a reduced variable plus
// the principal-cusp log formulas needed where the sampled bracket drops
// below the floating-point phase floor. See stable_fill.hpp.

// log theta_3 = sum_n [log(1 - w^{2n}) + 2 log(1 + w^{2n-1})] from the triple
// product; collecting w^j gives the explicit Lambert-type coefficients used
// by the branch-free exponential fill.
std::vector<double> theta_log_coeffs(std::size_t upto) {
    std::vector<double> lam(upto + 1, 0.0);
    for (std::size_t k = 1; k <= upto; ++k) {
        double sodd = (k % 2 == 1 ? 2.0 : -2.0) / double(k);
        double seven = -1.0 / double(k);
        for (std::size_t n = 1, j = k; j <= upto; ++n, j += k) {
            lam[j] += (n % 2 == 0) ? seven : sodd;
        }
    }
    return lam;
}

std::vector<double> theta_fill(double alpha, std::size_t m_max) {
    const double kappa = 3.0;
    const std::size_t upto = 16 * std::max<std::size_t>(m_max, 1024) + 1;
    auto lam = std::make_shared<std::vector<double>>(theta_log_coeffs(upto));
    return detail::exp_series_coeffs(
        [lam, alpha](std::size_t j) {
            return j < lam->size() ? alpha * (*lam)[j] : 0.0;
        },
        m_max, kappa);
}

std::vector<double> chi_fill(double alpha, const RealCharacter& chi, std::size_t stride,
                             std::size_t m_max) {
    const int q = chi.modulus();
    const int delta = chi.delta();
    const RealCharacter table = chi;
    auto base_u = [table, delta, stride](std::size_t k) -> double {
        std::size_t j = k * stride; // index in the w variable
        auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(j + 1))));
        if (n * n != j + 1 || n < 2) return 0.0;
        double v = table(static_cast<long long>(n));
        return delta == 1 ? double(n) * v : v;
    };
    detail::CuspLog plus = [q, delta, table, stride](Complex u, Complex& out) {
        Complex x = -double(q) * std::log(u) / (kPi * double(stride));
        Complex e = kPi / (double(q) * x);
        if (e.real() < 4.0) return false;
        Complex corr = 0.0;
        for (long long n = 2; n <= 2 * q + 5 && (double(n * n - 1) * e.real()) < 700.0; ++n) {
            int v = table(n);
            if (v == 0) continue;
            Complex t = std::exp(-double(n * n - 1) * e);
            corr += (delta == 1 ? double(n) * double(v) : double(v)) * t;
        }
        out = -(0.5 + delta) * std::log(x) - e + kPi * x / double(q) + std::log(1.0 + corr);
        return true;
    };
    std::size_t k_max = m_max / stride;
    double kappa = std::max(3.0, double(k_max) / 40.0);
    std::vector<double> reduced =
        detail::circle_power_coeffs(base_u, alpha, k_max, kappa, plus, nullptr);
    std::vector<double> out(m_max + 1, 0.0);
    for (std::size_t k = 0; k < reduced.size(); ++k) {
        if (k * stride <= m_max) out[k * stride] = reduced[k];
    }
    return out;
}

// Delta-bracket = prod (1 - w^n)^{24}, so log = -24 sum_j (sigma_1(j)/j) w^j.
std::vector<double> delta_fill(double alpha, std::size_t m_max) {
    const double kappa = 4.0;
    const std::size_t upto = 16 * std::max<std::size_t>(m_max, 1024) + 1;
    auto s1 = std::make_shared<std::vector<double>>(upto + 1, 0.0);
    for (std::size_t d = 1; d <= upto; ++d) {
        for (std::size_t j = d; j <= upto; j += d) (*s1)[j] += double(d);
    }
    return detail::exp_series_coeffs(
        [s1, alpha](std::size_t j) {
            return j < s1->size() ? -24.0 * alpha * (*s1)[j] / double(j) : 0.0;
        },
        m_max, kappa);
}

} // namespace

CoeffStream theta_coeff_stream(double alpha, std::size_t cache_capacity) {
    BaseSeries base = BaseSeries::sparse(
        [](std::size_t j) {
            auto r = static_cast<std::size_t>(std::llround(std::sqrt(double(j))));
            return r * r == j ? 2.0 : 0.0;
        },
        next_square_index);
    CoeffStream s("exp(-pi*x)", alpha, 0.0, 1.0, std::move(base), cache_capacity);
    s.set_dd_limit(320);
    s.set_stable_fill([alpha](std::size_t n) { return theta_fill(alpha, n); });
    return s;
}

CoeffStream chi_coeff_stream(double alpha, const RealCharacter& chi,
                             std::size_t cache_capacity) {
    require_positive(chi);
    const RealCharacter table = chi;
    const int delta = chi.delta();
    auto coeff = [table, delta](std::size_t j) -> double {
        auto n = static_cast<std::size_t>(std::llround(std::sqrt(double(j + 1))));
        if (n * n != j + 1 || n < 2) return 0.0;
        double v = table(static_cast<long long>(n));
        return delta == 1 ? double(n) * v : v;
    };
    auto support_next = [](std::size_t j) -> std::size_t {
        auto n = static_cast<std::size_t>(std::ceil(std::sqrt(double(j + 1))));
        n = std::max<std::size_t>(n, 2);
        return n * n - 1;
    };
    // common stride of the support (n^2 - 1 over n coprime to q): permits the
    // reduced-variable sampling and explains the zero pattern of the stream
    std::size_t stride = 0;
    for (long long n = 2; n <= 2 * chi.modulus() + 1; ++n) {
        if (table(n) == 0) continue;
        stride = std::gcd(stride, std::size_t(n * n - 1));
        if (stride == 1) break;
    }
    if (stride == 0) stride = 1;

    CoeffStream s("exp(-pi*x/q)", alpha, alpha, std::pow(2.0, alpha),
                  BaseSeries::sparse(coeff, support_next), cache_capacity);
    s.set_dd_limit(160 * stride);
    s.set_stable_fill([alpha, table, stride](std::size_t n) {
        return chi_fill(alpha, table, stride, n);
    });
    return s;
}

CoeffStream cusp_coeff_stream(double alpha, const CuspForm& f, std::size_t cache_capacity) {
    if (!f.fricke_self_dual()) {
        throw DomainError("self_duality_required", "cusp form must satisfy Wf = f");
    }
    require_positive(f);
    const CuspForm form = f;
    auto coeff = [form](std::size_t j) { return form.coeff(j + 1); }; // a_j = a_f(j+1)
    CoeffStream s("exp(-2*pi*y)", alpha, alpha, 1.0, BaseSeries::dense(coeff),
                  cache_capacity);
    // the eta-product fill applies to the Ramanujan Delta (whose bracket is
    // exactly prod (1-w^n)^24); other forms stay on the recurrence. The dd
    // recurrence drifts early on the tau-sized base, so its trust range is
    // short here.
    if (f.same_as(CuspForm::delta())) {
        s.set_dd_limit(32);
        s.set_stable_fill([alpha](std::size_t n) { return delta_fill(alpha, n); });
    }
    return s;
}

const CoeffStream& theta_stream_cached(double alpha) {
    static std::mutex mtx;
    static std::map<std::uint64_t, std::unique_ptr<CoeffStream>> cache;
    std::uint64_t key;
    static_assert(sizeof(key) == sizeof(alpha));
    std::memcpy(&key, &alpha, sizeof(key));
    std::lock_guard lock(mtx);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<CoeffStream>(theta_coeff_stream(alpha))).first;
    }
    return *it->second;
}

double c_alpha(std::size_t m, double alpha) { return theta_stream_cached(alpha).coeff(m); }

double c_chi_alpha(std::size_t m, double alpha, const RealCharacter& chi) {
    return chi_coeff_stream(alpha, chi, std::max<std::size_t>(m + 1, 64)).coeff(m);
}

double c_f_alpha(std::size_t m, double alpha, const CuspForm& f) {
    return cusp_coeff_stream(alpha, f, std::max<std::size_t>(m + 1, 64)).coeff(m);
}

std::vector<double> brute_force_pow_oracle(const std::vector<double>& base_coeffs,
                                           double alpha, std::size_t n,
                                           std::vector<double>* conditioning) {
    if (n > 64) throw DomainError("oracle_range", "brute-force oracle capped at index 64");
    if (base_coeffs.empty() || base_coeffs[0] != 1.0) {
        throw DomainError("normalization", "base series must have a_0 = 1");
    }
    std::vector<DD> u(n + 1, DD{});
    for (std::size_t j = 1; j <= n && j < base_coeffs.size(); ++j) {
        u[j] = dd_from(base_coeffs[j]);
    }

    std::vector<DD> out(n + 1, DD{});
    out[0] = dd_from(1.0);
    std::vector<DD> upow(n + 1, DD{});
    upow[0] = dd_from(1.0);
    std::vector<double> cond(n + 1, 1.0);

    DD term = dd_from(1.0); // binom(alpha, j)
    for (std::size_t j = 1; j <= n; ++j) {
        std::vector<DD> next(n + 1, DD{});
        for (std::size_t i = 0; i + 1 <= n; ++i) {
            if (upow[i].hi == 0.0 && upow[i].lo == 0.0) continue;
            for (std::size_t k = 1; i + k <= n; ++k) {
                if (u[k].hi != 0.0) {
                    next[i + k] = dd_add(next[i + k], dd_mul(upow[i], u[k]));
                }
            }
        }
        upow = std::move(next);
        // alpha - (j-1) held exactly as a double-double before the division
        DD num = dd_two_sum(alpha, -double(j - 1));
        term = dd_mul(term, dd_div_d(num, double(j)));
        for (std::size_t i = 0; i <= n; ++i) {
            out[i] = dd_add(out[i], dd_mul(term, upow[i]));
            cond[i] += std::abs(term.hi * upow[i].hi);
        }
    }
    std::vector<double> result(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) result[i] = out[i].hi;
    if (conditioning) *conditioning = std::move(cond);
    return result;
}

} // namespace besselzeta
