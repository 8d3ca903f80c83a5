#include "henon/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace henon {

CoefficientSpec CoefficientSpec::power_envelope(double A0, double a, double Ainf, double b) {
    if (!(A0 > 0.0) || !(Ainf > 0.0))
        throw std::domain_error("CoefficientSpec: amplitudes must be positive");
    if (!(a > -2.0)) throw std::domain_error("CoefficientSpec: need a > -2");
    CoefficientSpec s;
    s.kind = Kind::PowerEnvelope;
    s.A0 = A0;
    s.a = a;
    s.Ainf = Ainf;
    s.b = b;
    return s;
}

CoefficientSpec CoefficientSpec::one() { return power_envelope(1.0, 0.0, 1.0, 0.0); }

CoefficientSpec CoefficientSpec::tabulated(RadialFunction f) {
    for (double v : f.values())
        if (!(v > 0.0)) throw std::domain_error("CoefficientSpec: tabulated α must be positive");
    CoefficientSpec s;
    s.kind = Kind::Tabulated;
    s.table = std::move(f);
    s.a = s.table->head_exp();
    s.b = s.table->tail_exp();
    return s;
}

double CoefficientSpec::head_envelope_exp() const { return a; }
double CoefficientSpec::tail_envelope_exp() const { return b; }

double eval_coefficient(const CoefficientSpec& alpha, double r) {
    if (!(r > 0.0)) throw std::domain_error("eval_coefficient: need r > 0");
    if (alpha.kind == CoefficientSpec::Kind::PowerEnvelope)
        return (r <= 1.0) ? alpha.A0 * std::pow(r, alpha.a) : alpha.Ainf * std::pow(r, alpha.b);
    return (*alpha.table)(r);
}

MeasureSpec MeasureSpec::uniform_ball(double radius, double mass) {
    if (!(radius > 0.0)) throw std::domain_error("MeasureSpec: need radius > 0");
    if (!(mass > 0.0)) throw std::domain_error("MeasureSpec: μ must be nontrivial (mass > 0)");
    MeasureSpec m;
    m.kind = Kind::UniformBall;
    m.radius = radius;
    m.mass = mass;
    return m;
}

MeasureSpec MeasureSpec::sphere_shell(double radius, double mass) {
    MeasureSpec m = uniform_ball(radius, mass);
    m.kind = Kind::SphereShell;
    return m;
}

MeasureSpec MeasureSpec::radial_density(RadialFunction f) {
    MeasureSpec m;
    m.kind = Kind::RadialDensity;
    m.density = std::move(f);
    return m;
}

ProblemSpec reference_problem() {
    ProblemSpec s;
    s.N = 3;
    s.p = 5.0;
    s.alpha = CoefficientSpec::one();
    s.mu = MeasureSpec::uniform_ball(1.0, 1.0);
    return s;
}

SourceNormParams reference_norms() { return SourceNormParams{}; }

}  // namespace henon
