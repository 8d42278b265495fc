#pragma once

#include <memory>
#include <string>
#include <vector>

#include "besselzeta/positivity.hpp"

namespace besselzeta {

// Real primitive Dirichlet character modulo q, supplied as an explicit
// period-q value table with entries in {-1, 0, +1}. Construction validates
// the table: zeros exactly at gcd(n,q) > 1, complete multiplicativity,
// chi(-1) = (-1)^delta, primitivity (no smaller induced modulus), and the
// Gauss sum identity tau(chi) = i^delta sqrt(q).
//
// Copies are cheap (shared immutable data).
class RealCharacter {
  public:
    RealCharacter(int modulus, std::vector<int> values, int delta,
                  std::string name = "custom");

    // parses {"q": 4, "values": [0,1,0,-1], "delta": 1, "name": "..."}
    static RealCharacter from_json_text(const std::string& text);

    // bundled characters used by the theorem validation suites
    static const RealCharacter& mod3();     // odd,  delta = 1
    static const RealCharacter& mod4();     // odd,  delta = 1
    static const RealCharacter& mod5();     // even, delta = 0
    static const RealCharacter& mod8();     // even, delta = 0
    static const RealCharacter& mod8_odd(); // odd,  delta = 1
    static const RealCharacter* find_bundled(const std::string& name);

    int modulus() const { return data_->q; }
    int delta() const { return data_->delta; }
    const std::string& name() const { return data_->name; }
    int operator()(long long n) const {
        long long r = n % data_->q;
        if (r < 0) r += data_->q;
        return data_->values[static_cast<std::size_t>(r)];
    }
    const std::vector<int>& values() const { return data_->values; }

    PositivityMemo& positivity_memo() const { return data_->positivity; }

    // identity of the underlying table (memo sharing)
    bool same_as(const RealCharacter& o) const { return data_ == o.data_; }

  private:
    struct Data {
        int q = 1;
        std::vector<int> values;
        int delta = 0;
        std::string name;
        mutable PositivityMemo positivity;
    };
    std::shared_ptr<const Data> data_;
};

} // namespace besselzeta
