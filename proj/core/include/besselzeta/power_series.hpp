#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "besselzeta/characters.hpp"
#include "besselzeta/cusp_forms.hpp"

namespace besselzeta {

// Base q-expansion 1 + sum_{j>=1} a_j q^j handed to the power rule. Sparse
// bases list their nonzero exponents so the recurrence skips zero terms.
struct BaseSeries {
    std::function<double(std::size_t)> coeff;            // a_j for j >= 1
    std::function<std::size_t(std::size_t)> support_next; // smallest nonzero j' >= j, or SIZE_MAX
    static BaseSeries dense(std::function<double(std::size_t)> coeff);
    static BaseSeries sparse(std::function<double(std::size_t)> coeff,
                             std::function<std::size_t(std::size_t)> support_next);
};

// Coefficient stream b_m of (1 + sum a_j q^j)^alpha by the power rule
//   b_m = (1/m) sum_{k=1..m} (k(alpha+1) - m) a_k b_{m-k},  b_0 = 1.
//
// The cache is append-only up to a fixed capacity; reads of already
// published entries are lock-free, extension is serialized. Re-reading an
// index always returns the identical value.
class CoeffStream {
  public:
    CoeffStream(std::string q_meaning, double alpha, double exponent_offset,
                double prefactor, BaseSeries base, std::size_t cache_capacity = 10000);

    double alpha() const;
    double exponent_offset() const; // leading exponent shift (alpha for the chi/f cases)
    double prefactor() const;       // overall factor in front of the expansion (2^alpha for chi)
    const std::string& q_meaning() const;
    std::size_t capacity() const;

    double coeff(std::size_t m) const; // extends the cache as needed
    void extend(std::size_t n) const;  // ensure indices 0..n are published
    std::size_t published() const;

    // copy with coefficient `index` shifted by `delta` as read out (the
    // recurrence itself is untouched); used by the check suite to verify
    // that the theorem identities actually react to coefficient faults
    CoeffStream perturbed(std::size_t index, double delta) const;

    // empirical growth constant max_{1<=m<=limit} |b_m| / m^p
    double growth_constant(double p, std::size_t limit = 300) const;

    // install the one-shot analytic fill used past the stability range of
    // the forward recurrence (set by the family factories below)
    void set_stable_fill(std::function<std::vector<double>(std::size_t)> fill);

    // highest index the double-double recurrence run is trusted for (family
    // dependent; the factories measure this against the e^{c sqrt(m)} kernel)
    void set_dd_limit(std::size_t limit);

  private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
    std::size_t perturb_index_ = SIZE_MAX;
    double perturb_delta_ = 0.0;
};

// theta case, Eq-(106) normalization: theta(x)^alpha = 1 + sum c_alpha(m) e^{-pi m x}
CoeffStream theta_coeff_stream(double alpha, std::size_t cache_capacity = 10000);

// Dirichlet theta case: theta(x,chi)^alpha = 2^alpha sum c_{chi,alpha}(m) e^{-pi(m+alpha)x/q}.
// Requires the positivity gate for chi.
CoeffStream chi_coeff_stream(double alpha, const RealCharacter& chi,
                             std::size_t cache_capacity = 10000);

// cusp form case: f(iy)^alpha = sum c_{f,alpha}(m) e^{-2 pi (m+alpha) y}.
// Requires the positivity gate for f.
CoeffStream cusp_coeff_stream(double alpha, const CuspForm& f,
                              std::size_t cache_capacity = 10000);

// convenience single-coefficient accessors (streams cached per alpha for the
// theta case, rebuilt per call for chi/f)
double c_alpha(std::size_t m, double alpha);
double c_chi_alpha(std::size_t m, double alpha, const RealCharacter& chi);
double c_f_alpha(std::size_t m, double alpha, const CuspForm& f);

// shared theta stream cache used by the series evaluators
const CoeffStream& theta_stream_cached(double alpha);

// Direct truncated binomial expansion sum_j binom(alpha,j) u^j of (1+u)^alpha,
// u = sum_{j>=1} a_j q^j. Test oracle for the power rule; O(n^3), capped at
// n = 64, accumulated in double-double because the expansion cancels
// violently. `conditioning`, when given, receives sum_j |binom u^j| per
// index: the attainable absolute accuracy is ~1e-30 x conditioning.
std::vector<double> brute_force_pow_oracle(const std::vector<double>& base_coeffs,
                                           double alpha, std::size_t n,
                                           std::vector<double>* conditioning = nullptr);

} // namespace besselzeta
