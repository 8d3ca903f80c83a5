// Weighted annulus norms ‖f‖_{L^q_{β,γ}} = sup_R R^{-N/q} ‖f‖_{L^q(A(0,R))} / ω_{β,γ}(R),
// A(0,R) the annulus (R/2, R), discretized over the dyadic R-grid spanning
// [2 r_min, r_max].
#pragma once

#include "henon/grid.hpp"

namespace henon {

// q ∈ [1, ∞]; pass std::numeric_limits<double>::infinity() for the sup norm.
double weighted_norm(const RadialFunction& f, int N, double q, const WeightParams& w);

}  // namespace henon
