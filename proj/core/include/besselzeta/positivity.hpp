#pragma once

#include <cstddef>
#include <mutex>
#include <optional>

namespace besselzeta {

// Outcome of the numerical positivity verification that gates every
// fractional power of a theta series or cusp form. A grid check plus local
// refinement, not a proof.
struct PositivityReport {
    bool positive = false;
    double min_value = 0.0;
    double min_x = 0.0;
    std::size_t grid_points = 0;
};

// Memo slot embedded in character/cusp-form data so the check runs once per
// object. Logically the object stays immutable.
struct PositivityMemo {
    mutable std::mutex mutex;
    mutable std::optional<PositivityReport> report;
};

} // namespace besselzeta
