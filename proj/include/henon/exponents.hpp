// Closed-form critical exponents p_JL, p*(η), p_*(η), admissibility of
// (p, r, c, d) against the coefficient envelopes, the Kelvin-dual parameter
// map, and the ν-window feasibility set behind the uniform estimates.
#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "henon/problem.hpp"

namespace henon {

// Extended reals: +∞ is an ordinary double infinity and compares greater
// than every finite value.
using extended_real = double;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Joseph-Lundgren exponent: 1 + 4/(N-4-sqrt(4N-4)) for N > 10, else +∞.
extended_real p_joseph_lundgren(int N);

// p*(η) = 1 + 2(η+2)/(N-η-4-sqrt((η+2)(2N+η-2))) for N > 10+4η, else +∞.
// Degenerate η ≤ -2 (outside the paper's use, where η = min{a,0} > -2)
// returns 1: no p > 1 admits the ν-window, and the window equivalence
// "nonempty iff 1 < p < p*(η)" stays valid.
extended_real p_star_upper(int N, double eta);

// p_*(η) = 1 + 2(η+2)/(N-η-4+sqrt((η+2)(2N+η-2))) for η > -2, else exactly 1.
double p_star_lower(int N, double eta);

struct AdmissibilityCheck {
    std::string name;
    std::string inequality;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<AdmissibilityCheck> checks;
    // Derived quantities, valid when admissible:
    double q = kInf;        // r/(p-1)
    double c_star = 0.0;    // min{c, 0}
    double d_star = 0.0;    // max{d, -N+2}
    double c_bar = 0.0;     // (p-1) c_* + a
    double d_bar = 0.0;     // (p-1) d_* + b
};

// Evaluates the four source-side inequalities
//   p > (N+b)/(N-2),  r > N(p-1)/2,  c > -(a+2)/(p-1),  d < -(b+2)/(p-1)
// plus p > 1 and r > p, and records q, c̄, d̄ (which are then automatically
// q > N/2, c̄ > -2, d̄ < -2).  a ≤ -2 is a domain error.
AdmissibilityReport check_admissible(const ProblemSpec& spec, const SourceNormParams& norms);

// True iff p_*(b) < p < p*(min{a,0}) (strict on both sides).
bool check_uniqueness_range(const ProblemSpec& spec);

struct DualParams {
    double a_sharp = 0.0;
    double b_sharp = 0.0;
    double c_sharp = 0.0;
    double d_sharp = 0.0;
};

// a# = (N-2)(p-1)-4-b, b# = (N-2)(p-1)-4-a, c# = -N+2-d, d# = -N+2-c.
DualParams kelvin_dual_params(int N, double p, double a, double b, double c, double d);
DualParams kelvin_dual_params(const ProblemSpec& spec, const SourceNormParams& norms);

struct NuWindow {
    double lo = 0.0;
    double hi = 0.0;
};

// The exact set {ν > 1 : ν²/(2ν-1) < p and p < 1 + 2(2+η)ν/(N-2)} as an open
// interval, or nullopt when empty.  Nonempty iff 1 < p < p*(η).
std::optional<NuWindow> nu_window(int N, double eta, double p);

}  // namespace henon
