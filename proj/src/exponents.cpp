#include "henon/exponents.hpp"

#include <cmath>
#include <stdexcept>

namespace henon {

extended_real p_joseph_lundgren(int N) {
    if (N < 3) throw std::domain_error("p_joseph_lundgren: need N >= 3");
    if (N <= 10) return kInf;
    return 1.0 + 4.0 / (N - 4.0 - std::sqrt(4.0 * N - 4.0));
}

extended_real p_star_upper(int N, double eta) {
    if (N < 3) throw std::domain_error("p_star_upper: need N >= 3");
    if (eta <= -2.0) return 1.0;
    if (!(N > 10.0 + 4.0 * eta)) return kInf;
    const double D = (eta + 2.0) * (2.0 * N + eta - 2.0);
    return 1.0 + 2.0 * (eta + 2.0) / (N - eta - 4.0 - std::sqrt(D));
}

double p_star_lower(int N, double eta) {
    if (N < 3) throw std::domain_error("p_star_lower: need N >= 3");
    if (!(eta > -2.0)) return 1.0;
    const double D = (eta + 2.0) * (2.0 * N + eta - 2.0);
    return 1.0 + 2.0 * (eta + 2.0) / (N - eta - 4.0 + std::sqrt(D));
}

AdmissibilityReport check_admissible(const ProblemSpec& spec, const SourceNormParams& norms) {
    const int N = spec.N;
    const double p = spec.p;
    const double a = spec.alpha.head_envelope_exp();
    const double b = spec.alpha.tail_envelope_exp();
    const double r = norms.r, c = norms.c, d = norms.d;
    if (N < 3) throw std::domain_error("check_admissible: need N >= 3");
    if (!(a > -2.0)) throw std::domain_error("check_admissible: need a > -2");

    AdmissibilityReport rep;
    auto add = [&rep](const std::string& name, const std::string& ineq, double lhs, double rhs,
                      bool holds) {
        rep.checks.push_back({name, ineq, lhs, rhs, holds});
    };
    add("superlinear", "p > 1", p, 1.0, p > 1.0);
    add("r_above_p", "r > p", r, p, r > p);
    add("serrin", "p > (N+b)/(N-2)", p, (N + b) / (N - 2.0), p > (N + b) / (N - 2.0));
    add("source_integrability", "r > N(p-1)/2", r, N * (p - 1.0) / 2.0,
        r > N * (p - 1.0) / 2.0);
    add("source_origin", "c > -(a+2)/(p-1)", c, -(a + 2.0) / (p - 1.0),
        c > -(a + 2.0) / (p - 1.0));
    add("source_decay", "d < -(b+2)/(p-1)", d, -(b + 2.0) / (p - 1.0),
        d < -(b + 2.0) / (p - 1.0));

    rep.admissible = true;
    for (const auto& ch : rep.checks) rep.admissible = rep.admissible && ch.holds;

    rep.q = std::isinf(r) ? kInf : r / (p - 1.0);
    rep.c_star = std::min(c, 0.0);
    rep.d_star = std::max(d, -(N - 2.0));
    rep.c_bar = (p - 1.0) * rep.c_star + a;
    rep.d_bar = (p - 1.0) * rep.d_star + b;
    if (rep.admissible) {
        add("derived_q", "q = r/(p-1) > N/2", rep.q, N / 2.0, rep.q > N / 2.0);
        add("derived_c_bar", "c_bar > -2", rep.c_bar, -2.0, rep.c_bar > -2.0);
        add("derived_d_bar", "d_bar < -2", rep.d_bar, -2.0, rep.d_bar < -2.0);
        for (const auto& ch : rep.checks) rep.admissible = rep.admissible && ch.holds;
    }
    return rep;
}

bool check_uniqueness_range(const ProblemSpec& spec) {
    const double a = spec.alpha.head_envelope_exp();
    const double b = spec.alpha.tail_envelope_exp();
    const double lo = p_star_lower(spec.N, b);
    const extended_real hi = p_star_upper(spec.N, std::min(a, 0.0));
    return lo < spec.p && spec.p < hi;
}

DualParams kelvin_dual_params(int N, double p, double a, double b, double c, double d) {
    const double E = (N - 2.0) * (p - 1.0) - 4.0;
    return DualParams{E - b, E - a, -(N - 2.0) - d, -(N - 2.0) - c};
}

DualParams kelvin_dual_params(const ProblemSpec& spec, const SourceNormParams& norms) {
    return kelvin_dual_params(spec.N, spec.p, spec.alpha.head_envelope_exp(),
                              spec.alpha.tail_envelope_exp(), norms.c, norms.d);
}

std::optional<NuWindow> nu_window(int N, double eta, double p) {
    if (N < 3) throw std::domain_error("nu_window: need N >= 3");
    if (!(p > 1.0)) return std::nullopt;           // ν²/(2ν-1) > 1 for all ν > 1
    if (!(eta > -2.0)) return std::nullopt;        // upper constraint caps p at 1
    // ν²/(2ν-1) < p  ⇔  ν² - 2pν + p < 0  ⇔  ν ∈ (p - s, p + s), s = sqrt(p²-p);
    // p < 1 + 2(2+η)ν/(N-2)  ⇔  ν > (p-1)(N-2)/(2(η+2)).
    const double s = std::sqrt(p * (p - 1.0));
    const double hi = p + s;
    const double lo = std::max(1.0, (p - 1.0) * (N - 2.0) / (2.0 * (eta + 2.0)));
    if (!(lo < hi)) return std::nullopt;
    return NuWindow{lo, hi};
}

}  // namespace henon
