#include "besselzeta/cusp_forms.hpp"

#include <cmath>
#include <mutex>

#include <json.hpp>

#include "besselzeta/errors.hpp"

namespace besselzeta {

namespace {

// tau(1..N) by repeated convolution squaring of the pentagonal-number
// expansion of prod (1-q^n): E^24 = ((E^2)^2)^2 squared once more times E^8.
// Convolutions are forward-stable (unlike the power-rule recurrence) and
// exact in doubles while the values stay below 2^53.
class TauTable {
  public:
    double value(std::size_t n) {
        std::lock_guard lock(mutex_);
        grow(n);
        return coeffs_[n - 1];
    }

    void fill(std::vector<double>& out, std::size_t n) {
        std::lock_guard lock(mutex_);
        grow(n);
        out.assign(coeffs_.begin(), coeffs_.begin() + n);
    }

  private:
    static std::vector<double> square(const std::vector<double>& v) {
        const std::size_t len = v.size();
        std::vector<double> out(len, 0.0);
        for (std::size_t i = 0; i < len; ++i) {
            if (v[i] == 0.0) continue;
            for (std::size_t j = 0; i + j < len; ++j) {
                if (v[j] != 0.0) out[i + j] += v[i] * v[j];
            }
        }
        return out;
    }

    void grow(std::size_t n) {
        if (coeffs_.size() >= n) return;
        std::size_t len = 64;
        while (len < n) len *= 2;
        std::vector<double> euler(len, 0.0);
        euler[0] = 1.0;
        for (std::size_t k = 1;; ++k) {
            std::size_t g1 = k * (3 * k - 1) / 2;
            std::size_t g2 = k * (3 * k + 1) / 2;
            if (g1 >= len && g2 >= len) break;
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            if (g1 < len) euler[g1] = sign;
            if (g2 < len) euler[g2] = sign;
        }
        std::vector<double> e2 = square(euler);
        std::vector<double> e4 = square(e2);
        std::vector<double> e8 = square(e4);
        std::vector<double> e16 = square(e8);
        std::vector<double> e24(len, 0.0);
        for (std::size_t i = 0; i < len; ++i) {
            if (e16[i] == 0.0) continue;
            for (std::size_t j = 0; i + j < len; ++j) e24[i + j] += e16[i] * e8[j];
        }
        coeffs_ = std::move(e24); // tau(n) = coeffs_[n-1]
    }

    std::mutex mutex_;
    std::vector<double> coeffs_;
};

TauTable& tau_table() {
    static TauTable table;
    return table;
}

} // namespace

std::vector<double> delta_coeffs(std::size_t n) {
    if (n == 0) throw DomainError("coeff_range", "need n >= 1");
    std::vector<double> out;
    tau_table().fill(out, n);
    return out;
}

struct CuspForm::Data {
    int k = 12;
    int q = 1;
    bool fricke_self_dual = true;
    bool builtin_delta = false;
    std::string name;
    std::vector<double> coeffs; // a_f(1..N) for user forms
    double growth_c = 1.0;
    mutable PositivityMemo positivity;
};

CuspForm::CuspForm(int weight, int level, std::vector<double> coeffs, bool fricke_self_dual,
                   std::string name) {
    if (weight <= 0 || weight % 4 != 0) {
        throw DomainError("weight_mod4", "weight must be a positive multiple of 4");
    }
    if (level < 1) throw DomainError("cusp_form_invalid", "level must be positive");
    if (coeffs.empty() || coeffs[0] != 1.0) {
        throw DomainError("cusp_form_invalid", "a_f(1) must equal 1");
    }
    auto d = std::make_shared<Data>();
    d->k = weight;
    d->q = level;
    d->fricke_self_dual = fricke_self_dual;
    d->name = std::move(name);
    d->coeffs = std::move(coeffs);
    double c = 1.0;
    for (std::size_t n = 1; n <= d->coeffs.size(); ++n) {
        c = std::max(c, std::abs(d->coeffs[n - 1]) / std::pow(double(n), d->k / 2.0));
    }
    d->growth_c = c;
    data_ = std::move(d);
}

CuspForm CuspForm::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.contains("builtin")) {
        std::string which = j.at("builtin").get<std::string>();
        if (which == "delta") return delta();
        throw DomainError("cusp_form_invalid", "unknown builtin form: " + which);
    }
    return CuspForm(j.at("k").get<int>(), j.at("q").get<int>(),
                    j.at("coeffs").get<std::vector<double>>(), j.value("fricke", true),
                    j.value("name", std::string("custom")));
}

const CuspForm& CuspForm::delta() {
    static const CuspForm d = [] {
        CuspForm f;
        auto data = std::make_shared<Data>();
        data->k = 12;
        data->q = 1;
        data->fricke_self_dual = true;
        data->builtin_delta = true;
        data->name = "delta";
        data->growth_c = 1.0; // |tau(n)| <= d(n) n^{11/2} < n^6; 1.0 verified in tests
        f.data_ = std::move(data);
        return f;
    }();
    return d;
}

int CuspForm::weight() const { return data_->k; }
int CuspForm::level() const { return data_->q; }
bool CuspForm::fricke_self_dual() const { return data_->fricke_self_dual; }
const std::string& CuspForm::name() const { return data_->name; }

double CuspForm::coeff(std::size_t n) const {
    if (n == 0) throw DomainError("coeff_range", "coefficients start at n = 1");
    if (data_->builtin_delta) return tau_table().value(n);
    if (n > data_->coeffs.size()) {
        throw ConvergenceError("truncation_failure",
                               "coefficient index beyond the stored range");
    }
    return data_->coeffs[n - 1];
}

std::size_t CuspForm::coeff_limit() const {
    return data_->builtin_delta ? SIZE_MAX : data_->coeffs.size();
}

double CuspForm::growth_constant() const { return data_->growth_c; }

PositivityMemo& CuspForm::positivity_memo() const { return data_->positivity; }

} // namespace besselzeta
