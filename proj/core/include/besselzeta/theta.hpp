#pragma once

#include <cstddef>
#include <functional>

#include "besselzeta/characters.hpp"
#include "besselzeta/cusp_forms.hpp"
#include "besselzeta/types.hpp"

namespace besselzeta {

// theta(x) = sum_{n in Z} e^{-pi n^2 x}; the functional equation
// theta(1/x) = sqrt(x) theta(x) reduces small arguments.
double theta0(double x);
double theta0_minus1(double x); // theta(x) - 1 without cancellation

// theta(x) for complex x with Re(x) > 0 (direct sum, no reduction); used by
// the rotated-contour continuation of Z_alpha.
Complex theta0_complex(Complex x);

// theta(x,chi) = sum_{n in Z} n^delta chi(n) e^{-pi n^2 x / q}
double theta_chi(double x, const RealCharacter& chi);

// f(iy) = sum_{n>=1} a_f(n) e^{-2 pi n y}; n_terms = 0 picks the cutoff from
// the tail bound C n^{k/2} e^{-2 pi n y}. Level-1 self-dual forms reduce
// y < 1 through the Fricke relation f(iy) = y^{-k} f(i/y).
double eval_cusp(double y, const CuspForm& f, std::size_t n_terms = 0);

// default grid for the positivity verification: log-spaced on [1e-3, 1e3]
struct PositivityGrid {
    double x_min = 1e-3;
    double x_max = 1e3;
    int points_per_decade = 80;
};

// Grid check plus golden-section refinement around the grid minimum.
PositivityReport check_positivity(const std::function<double(double)>& f,
                                  const PositivityGrid& grid = {});
PositivityReport check_positivity(const RealCharacter& chi, const PositivityGrid& grid = {});
PositivityReport check_positivity(const CuspForm& f, const PositivityGrid& grid = {});

// Memoized gates: run the check on first use, throw
// DomainError("positivity_gate") when it fails.
const PositivityReport& require_positive(const RealCharacter& chi);
const PositivityReport& require_positive(const CuspForm& f);

} // namespace besselzeta
