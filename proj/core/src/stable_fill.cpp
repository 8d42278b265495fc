#include "stable_fill.hpp"

#include <cmath>
#include <numbers>

#include "besselzeta/errors.hpp"

namespace besselzeta::detail {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTau = 2.0 * std::numbers::pi;
} // namespace

void fft_pow2(std::vector<Complex>& x, int sign) {
    const std::size_t n = x.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw DomainError("fft_size", "FFT length must be a power of two");
    }
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTau / double(len);
        const Complex wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                Complex u = x[i + k];
                Complex v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

namespace {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

struct WalkState {
    Complex log_val{0.0, 0.0};
    bool in_zone = false;
    double max_step = 0.0; // largest |Im log-ratio| seen, unwrap validity metric
};

} // namespace

std::vector<double> circle_power_coeffs(const std::function<double(std::size_t)>& base,
                                        double alpha, std::size_t k_max, double kappa,
                                        const CuspLog& at_plus1, const CuspLog& at_minus1) {
    const double r = std::exp(-kappa / double(k_max));

    for (std::size_t m_log = 0; m_log < 3; ++m_log) {
        // sample density: generous headroom for the phase rates near the
        // boundary cusps; doubled on an unwrap-step violation
        const std::size_t density = 64 << m_log;
        const std::size_t alias = static_cast<std::size_t>(
            double(k_max) * (1.0 + 50.0 / kappa));
        std::size_t big = next_pow2(std::max({density * k_max, alias, std::size_t(16384)}));
        if (big > (std::size_t(1) << 22)) big = std::size_t(1) << 22;
        const std::size_t M = big;

        // exact samples of the bracket on the circle
        std::vector<Complex> data(M, Complex(0.0, 0.0));
        data[0] = 1.0;
        double rj = 1.0;
        for (std::size_t j = 1; j < M; ++j) {
            rj *= r;
            double bj = base(j);
            if (bj != 0.0) data[j] = bj * rj;
            if (rj < 1e-320) break;
        }
        std::vector<Complex> samples = data;
        fft_pow2(samples, +1); // samples[i] = bracket(r e^{2 pi i i/M}) + alias tail

        // phase-continuous log on i = 0..M/2, mirrored by conjugation
        std::vector<Complex> fvals(M, Complex(0.0, 0.0));
        WalkState st;
        bool ok = true;
        for (std::size_t i = 0; i <= M / 2; ++i) {
            const double phi = kTau * double(i) / double(M);
            const Complex u = std::polar(r, phi);
            Complex zone_log;
            bool zone = at_plus1 && at_plus1(u, zone_log);
            if (!zone && at_minus1 && at_minus1(u, zone_log)) zone = true;

            Complex cur;
            if (i == 0) {
                if (zone) {
                    cur = zone_log; // real anchor by positivity on (0,1)
                } else {
                    double b0 = samples[0].real();
                    if (!(b0 > 0.0)) {
                        throw ConvergenceError("branch",
                                               "bracket not positive at the real anchor");
                    }
                    cur = std::log(b0);
                }
            } else if (zone) {
                if (!st.in_zone) {
                    // splice the formula branch onto the accumulated one
                    Complex cont = st.log_val + std::log(samples[i] / samples[i - 1]);
                    double k = std::round((cont.imag() - zone_log.imag()) / kTau);
                    cur = zone_log + Complex(0.0, kTau * k);
                } else {
                    // stay on the same 2 pi k sheet as the previous zone sample
                    double k = std::round((st.log_val.imag() - zone_log.imag()) / kTau);
                    cur = zone_log + Complex(0.0, kTau * k);
                }
            } else {
                Complex step = std::log(samples[i] / samples[i - 1]);
                st.max_step = std::max(st.max_step, std::abs(step.imag()));
                if (std::abs(step.imag()) > 2.6) {
                    ok = false;
                    break;
                }
                cur = st.log_val + step;
            }
            st.log_val = cur;
            st.in_zone = zone;

            Complex al = alpha * cur;
            Complex f = al.real() < -740.0 ? Complex(0.0, 0.0) : std::exp(al);
            fvals[i] = f;
            if (i > 0 && i < M / 2) fvals[M - i] = std::conj(f);
        }
        if (!ok) continue; // retry with a denser grid

        fft_pow2(fvals, -1);
        std::vector<double> out(k_max + 1, 0.0);
        double rmk = 1.0;
        for (std::size_t k = 0; k <= k_max; ++k) {
            out[k] = fvals[k].real() / double(M) * rmk;
            rmk /= r;
        }
        return out;
    }
    throw ConvergenceError("branch",
                           "phase unwrapping failed at the maximum sample density");
}

std::vector<double> exp_series_coeffs(const std::function<double(std::size_t)>& lam,
                                      std::size_t k_max, double kappa) {
    const double r = std::exp(-kappa / double(k_max));
    const std::size_t M =
        next_pow2(std::max<std::size_t>(16 * k_max, std::size_t(16384)));

    std::vector<Complex> v(M, Complex(0.0, 0.0));
    double rj = 1.0;
    for (std::size_t j = 1; j < M; ++j) {
        rj *= r;
        if (rj < 1e-300) break;
        double lj = lam(j);
        if (lj != 0.0) v[j] = lj * rj;
    }
    fft_pow2(v, +1); // v[i] = L(r e^{2 pi i i/M})
    for (std::size_t i = 0; i < M; ++i) {
        v[i] = v[i].real() < -740.0 ? Complex(0.0, 0.0) : std::exp(v[i]);
    }
    fft_pow2(v, -1);
    std::vector<double> out(k_max + 1, 0.0);
    double rmk = 1.0;
    for (std::size_t k = 0; k <= k_max; ++k) {
        out[k] = v[k].real() / double(M) * rmk;
        rmk /= r;
    }
    return out;
}

} // namespace besselzeta::detail
