// Radial Newtonian potential: for radial f, Newton's theorem collapses the
// convolution Γ*f (Γ the fundamental solution of -Δ) to
//   (Γ*f)(r) = (N-2)^{-1} [ r^{-(N-2)} ∫_0^r s^{N-1} f ds + ∫_r^∞ s f ds ],
// integrated exactly per power-law segment; head/tail extensions enter in
// closed form.
#pragma once

#include "henon/problem.hpp"

namespace henon {

struct PotentialOptions {
    bool include_head = true;  // integrate the r < r_min power extension
    bool include_tail = true;  // integrate the r > r_max power extension
};

// Γ*f on f's grid.  Output head exponent is min{σ0+2, 0}, tail exponent
// max{σ∞+2, -(N-2)}.  Throws when an included extension integral diverges
// (head needs σ0 + N > 0, tail needs σ∞ + 2 < 0).
RadialFunction newtonian_potential(const RadialFunction& f, int N,
                                   const PotentialOptions& opts = {});

// Γ*μ at κ = 1.  UniformBall and SphereShell use the exact closed forms;
// RadialDensity delegates to newtonian_potential and retabulates on `grid`.
RadialFunction potential_of_measure(const MeasureSpec& mu, int N, const GridPtr& grid);

}  // namespace henon
