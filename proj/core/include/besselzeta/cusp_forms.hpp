#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "besselzeta/positivity.hpp"

namespace besselzeta {

// Exact Ramanujan tau values tau(1..n), from the 24th power of the
// pentagonal-number expansion of the Euler product. The table is cached
// process-wide and extended on demand.
std::vector<double> delta_coeffs(std::size_t n);

// Holomorphic cusp form of weight k on Gamma_0(q), described by its Fourier
// coefficients a_f(n) with a_f(1) = 1. Only forms with k = 0 mod 4 are
// representable (the series formulas assume it). Copies share immutable data.
class CuspForm {
  public:
    // a user-supplied coefficient list a_f(1..N)
    CuspForm(int weight, int level, std::vector<double> coeffs, bool fricke_self_dual,
             std::string name = "custom");

    // parses {"k":12, "q":1, "coeffs":[...], "fricke": true} or {"builtin":"delta"}
    static CuspForm from_json_text(const std::string& text);

    static const CuspForm& delta(); // Ramanujan Delta, k=12, q=1, Wf=f

    int weight() const;
    int level() const;
    bool fricke_self_dual() const;
    const std::string& name() const;

    // a_f(n), n >= 1; extends the builtin table on demand, throws
    // ConvergenceError("truncation_failure") past the end of a fixed list
    double coeff(std::size_t n) const;

    // largest n for which coeff(n) can be produced (SIZE_MAX if extendable)
    std::size_t coeff_limit() const;

    // empirical constant C with |a_f(n)| <= C n^{k/2} over the computed range
    double growth_constant() const;

    PositivityMemo& positivity_memo() const;
    bool same_as(const CuspForm& o) const { return data_ == o.data_; }

  private:
    struct Data;
    CuspForm() = default;
    std::shared_ptr<const Data> data_;
};

} // namespace besselzeta
