#include "besselzeta/characters.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "besselzeta/errors.hpp"

namespace besselzeta {

namespace {

void validate_table(int q, const std::vector<int>& values, int delta) {
    if (q < 1) throw DomainError("character_invalid", "modulus must be positive");
    if (static_cast<int>(values.size()) != q) {
        throw DomainError("character_invalid", "value table length must equal the modulus");
    }
    if (delta != 0 && delta != 1) {
        throw DomainError("character_invalid", "parity delta must be 0 or 1");
    }
    for (int n = 0; n < q; ++n) {
        int v = values[static_cast<std::size_t>(n)];
        if (v < -1 || v > 1) {
            throw DomainError("character_invalid", "table entries must be in {-1,0,1}");
        }
        bool coprime = std::gcd(n, q) == 1;
        if (coprime && v == 0) {
            throw DomainError("character_invalid", "chi(n) = 0 at n coprime to q");
        }
        if (!coprime && v != 0) {
            throw DomainError("character_invalid", "chi(n) != 0 at gcd(n,q) > 1");
        }
    }
    // complete multiplicativity on the table
    for (int a = 0; a < q; ++a) {
        for (int b = a; b < q; ++b) {
            int lhs = values[static_cast<std::size_t>((a * b) % q)];
            int rhs = values[static_cast<std::size_t>(a)] * values[static_cast<std::size_t>(b)];
            if (lhs != rhs) {
                throw DomainError("character_invalid", "table is not completely multiplicative");
            }
        }
    }
    // parity
    int chi_minus1 = q == 1 ? 1 : values[static_cast<std::size_t>(q - 1)];
    if (chi_minus1 != (delta == 0 ? 1 : -1)) {
        throw DomainError("character_invalid", "chi(-1) does not match the declared parity");
    }
    // primitivity: conductor must be q itself
    for (int d = 1; d < q; ++d) {
        if (q % d != 0) continue;
        bool induced = true;
        for (int a = 0; a < q && induced; ++a) {
            if (std::gcd(a, q) != 1) continue;
            for (int b = a; b < q; ++b) {
                if (std::gcd(b, q) != 1) continue;
                if ((a - b) % d == 0 &&
                    values[static_cast<std::size_t>(a)] != values[static_cast<std::size_t>(b)]) {
                    induced = false;
                    break;
                }
            }
        }
        if (induced) {
            throw DomainError("character_invalid",
                              "character is induced from modulus " + std::to_string(d) +
                                  " (not primitive)");
        }
    }
    // Gauss sum tau(chi) = i^delta sqrt(q) for real primitive chi
    std::complex<double> tau = 0.0;
    for (int a = 0; a < q; ++a) {
        double ang = 2.0 * std::numbers::pi * a / q;
        tau += double(values[static_cast<std::size_t>(a)]) *
               std::complex<double>(std::cos(ang), std::sin(ang));
    }
    std::complex<double> expected =
        delta == 0 ? std::complex<double>(std::sqrt(double(q)), 0.0)
                   : std::complex<double>(0.0, std::sqrt(double(q)));
    if (std::abs(tau - expected) > 1e-12 * std::max(1.0, std::sqrt(double(q)))) {
        throw DomainError("character_gauss_sum",
                          "Gauss sum differs from i^delta sqrt(q); table rejected");
    }
}

} // namespace

RealCharacter::RealCharacter(int modulus, std::vector<int> values, int delta, std::string name) {
    validate_table(modulus, values, delta);
    auto d = std::make_shared<Data>();
    d->q = modulus;
    d->values = std::move(values);
    d->delta = delta;
    d->name = std::move(name);
    data_ = std::move(d);
}

RealCharacter RealCharacter::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int q = j.at("q").get<int>();
    std::vector<int> values = j.at("values").get<std::vector<int>>();
    int delta = j.at("delta").get<int>();
    std::string name = j.value("name", std::string("custom"));
    return RealCharacter(q, std::move(values), delta, std::move(name));
}

const RealCharacter& RealCharacter::mod3() {
    static const RealCharacter chi(3, {0, 1, -1}, 1, "mod3");
    return chi;
}

const RealCharacter& RealCharacter::mod4() {
    static const RealCharacter chi(4, {0, 1, 0, -1}, 1, "mod4");
    return chi;
}

const RealCharacter& RealCharacter::mod5() {
    static const RealCharacter chi(5, {0, 1, -1, -1, 1}, 0, "mod5");
    return chi;
}

const RealCharacter& RealCharacter::mod8() {
    static const RealCharacter chi(8, {0, 1, 0, -1, 0, -1, 0, 1}, 0, "mod8");
    return chi;
}

const RealCharacter& RealCharacter::mod8_odd() {
    static const RealCharacter chi(8, {0, 1, 0, 1, 0, -1, 0, -1}, 1, "mod8odd");
    return chi;
}

const RealCharacter* RealCharacter::find_bundled(const std::string& name) {
    if (name == "mod3") return &mod3();
    if (name == "mod4") return &mod4();
    if (name == "mod5") return &mod5();
    if (name == "mod8") return &mod8();
    if (name == "mod8odd") return &mod8_odd();
    return nullptr;
}

} // namespace besselzeta
