// Problem data: the radial coefficient α with its power envelopes, the
// nonnegative radial source measure μ, and the full instance (N, p, α, μ).
#pragma once

#include <optional>
#include <string>

#include "henon/grid.hpp"

namespace henon {

// α(r): either the two-branch power envelope A0 r^a (r ≤ 1), Ainf r^b (r > 1),
// or a tabulated radial function.  The envelope may jump at r = 1; only the
// growth envelopes enter the estimates.
struct CoefficientSpec {
    enum class Kind { PowerEnvelope, Tabulated };
    Kind kind = Kind::PowerEnvelope;

    double A0 = 1.0, a = 0.0, Ainf = 1.0, b = 0.0;
    std::optional<RadialFunction> table;

    static CoefficientSpec power_envelope(double A0, double a, double Ainf, double b);
    static CoefficientSpec one();  // α ≡ 1, the Lane-Emden case
    static CoefficientSpec tabulated(RadialFunction f);

    // Envelope exponents: (a, b) for PowerEnvelope, (head_exp, tail_exp) for
    // Tabulated.
    double head_envelope_exp() const;
    double tail_envelope_exp() const;
};

double eval_coefficient(const CoefficientSpec& alpha, double r);

struct MeasureSpec {
    enum class Kind { UniformBall, SphereShell, RadialDensity };
    Kind kind = Kind::UniformBall;

    double radius = 1.0;
    double mass = 1.0;
    std::optional<RadialFunction> density;

    static MeasureSpec uniform_ball(double radius, double mass);
    static MeasureSpec sphere_shell(double radius, double mass);
    static MeasureSpec radial_density(RadialFunction f);
};

struct ProblemSpec {
    int N = 3;
    double p = 5.0;
    CoefficientSpec alpha;
    MeasureSpec mu;
};

// The tuple (r, c, d) governing Γ*μ ∈ L^r_{c,d}; r may be infinity.
struct SourceNormParams {
    double r = std::numeric_limits<double>::infinity();
    double c = 0.0;
    double d = -1.0;
};

// Reference instance used throughout the tests: N=3, p=5, α ≡ 1, μ the unit
// ball of unit mass; Γ*μ is bounded with (N-2)-decay so (r,c,d)=(∞,0,-1).
ProblemSpec reference_problem();
SourceNormParams reference_norms();

}  // namespace henon
