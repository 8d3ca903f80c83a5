#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "henon/exponents.hpp"

using namespace henon;

namespace {

// Independent oracle for the ν-window: scan 10^4 points of ν between 1 and a
// generous cap and test both defining inequalities directly.
bool window_nonempty_by_scan(int N, double eta, double p) {
    const double cap = 4.0 * p + 10.0;
    for (int i = 1; i < 10000; ++i) {
        const double nu = 1.0 + (cap - 1.0) * i / 10000.0;
        const bool lower = nu * nu / (2.0 * nu - 1.0) < p;
        const bool upper = p < 1.0 + 2.0 * (2.0 + eta) * nu / (N - 2.0);
        if (lower && upper) return true;
    }
    return false;
}

// Positive root of h(ν) = (N-4η-10)ν² - 2(N-η-4)ν + (N-2) by bisection, then
// p = ν²/(2ν-1); the two-way oracle for p*(η).
double p_star_upper_by_quadratic(int N, double eta) {
    auto h = [&](double nu) {
        return (N - 4.0 * eta - 10.0) * nu * nu - 2.0 * (N - eta - 4.0) * nu + (N - 2.0);
    };
    double lo = 1.0, hi = 1.0;
    while (h(hi) < 0.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
    }
    const double nu = 0.5 * (lo + hi);
    return nu * nu / (2.0 * nu - 1.0);
}

}  // namespace

TEST_CASE("p_joseph_lundgren branch values") {
    CHECK(std::isinf(p_joseph_lundgren(3)));
    CHECK(std::isinf(p_joseph_lundgren(10)));
    CHECK(p_joseph_lundgren(11) == doctest::Approx(6.922024587).epsilon(1e-8));
    CHECK(p_joseph_lundgren(12) == doctest::Approx(3.926649916).epsilon(1e-8));
    CHECK_THROWS_AS(p_joseph_lundgren(2), std::domain_error);
}

TEST_CASE("p_JL equals p*(0) and matches the quadratic-root oracle") {
    for (int N = 3; N <= 30; ++N) {
        CHECK(p_joseph_lundgren(N) == p_star_upper(N, 0.0));
        if (N > 10) {
            const double oracle = p_star_upper_by_quadratic(N, 0.0);
            CHECK(std::abs(p_joseph_lundgren(N) - oracle) <= 1e-9 * oracle);
        }
    }
}

TEST_CASE("p_star_upper examples") {
    CHECK(p_star_upper(12, 0.0) == doctest::Approx(3.926649916).epsilon(1e-8));
    CHECK(std::isinf(p_star_upper(9, 0.0)));
    const double v = p_star_upper(15, 1.0);
    CHECK(std::isfinite(v));
    CHECK(v > 1.0);
    CHECK(v == doctest::Approx(p_star_upper_by_quadratic(15, 1.0)).epsilon(1e-12));
}

TEST_CASE("p_star_lower examples") {
    // p_*(0) at N=3 equals 1 + 4/(N-4+sqrt(4N-4)).
    CHECK(p_star_lower(3, 0.0) == doctest::Approx(1.0 + 4.0 / (-1.0 + std::sqrt(8.0))));
    CHECK(p_star_lower(3, 0.0) == doctest::Approx(3.18766).epsilon(1e-5));
    for (int N = 3; N <= 30; ++N) CHECK(p_star_lower(N, -2.0) == 1.0);
    CHECK(p_star_lower(10, 2.0) == doctest::Approx(1.0 + 8.0 / (4.0 + std::sqrt(80.0))));
    CHECK(p_star_lower(10, 2.0) == doctest::Approx(1.61803).epsilon(1e-5));
}

TEST_CASE("window of p between the two exponents, continuity toward eta = -2") {
    for (int N = 3; N <= 30; ++N) {
        for (double eta : {-1.9, -1.0, 0.0, 0.5, 1.0, 2.0}) {
            const double lo = p_star_lower(N, eta);
            const double hi = p_star_upper(N, eta);
            if (std::isfinite(hi)) CHECK(lo < hi);
        }
        // Both formulas approach 1 as eta -> -2+.
        CHECK(p_star_lower(N, -2.0 + 1e-9) == doctest::Approx(1.0).epsilon(1e-4));
        CHECK(p_star_upper(N, -2.0 + 1e-9) == doctest::Approx(1.0).epsilon(1e-4));
    }
}

TEST_CASE("nu_window examples") {
    auto w = nu_window(3, 0.0, 5.0);
    REQUIRE(w.has_value());
    CHECK(w->lo == doctest::Approx(1.0));
    CHECK(w->hi == doctest::Approx(5.0 + 2.0 * std::sqrt(5.0)));
    CHECK(w->hi == doctest::Approx(9.47214).epsilon(1e-5));

    CHECK_FALSE(nu_window(12, 0.0, 4.0).has_value());
    for (int N : {3, 7, 15})
        for (double eta : {-1.0, 0.0, 2.0}) CHECK_FALSE(nu_window(N, eta, 1.0).has_value());
}

TEST_CASE("nu_window nonempty iff 1 < p < p*(eta), against the scan oracle") {
    int checked = 0;
    for (int N = 3; N <= 30; N += 3) {
        for (double eta : {-1.9, -1.0, 0.0, 0.5, 1.0, 2.0}) {
            const double pu = p_star_upper(N, eta);
            for (int i = 0; i < 40; ++i) {
                const double p = std::exp(std::log(1.0005) +
                                          (std::log(60.0) - std::log(1.0005)) * i / 39.0);
                const bool closed_form = nu_window(N, eta, p).has_value();
                CHECK(closed_form == (1.0 < p && p < pu));
                CHECK(closed_form == window_nonempty_by_scan(N, eta, p));
                ++checked;
            }
        }
    }
    CHECK(checked > 2000);
}

TEST_CASE("check_admissible on the reference instance") {
    ProblemSpec spec = reference_problem();
    SourceNormParams norms = reference_norms();
    auto rep = check_admissible(spec, norms);
    CHECK(rep.admissible);
    CHECK(rep.d_star == -1.0);
    CHECK(std::isinf(rep.q));
    CHECK(rep.c_bar == 0.0);
    CHECK(rep.d_bar == -4.0);

    // The report carries each lhs/rhs pair of Eq. (1.3).
    bool seen_serrin = false, seen_integrability = false, seen_origin = false, seen_decay = false;
    for (const auto& ch : rep.checks) {
        if (ch.name == "serrin") {
            seen_serrin = true;
            CHECK(ch.lhs == 5.0);
            CHECK(ch.rhs == doctest::Approx(3.0));
            CHECK(ch.holds);
        } else if (ch.name == "source_integrability") {
            seen_integrability = true;
            CHECK(std::isinf(ch.lhs));
            CHECK(ch.rhs == doctest::Approx(6.0));
            CHECK(ch.holds);
        } else if (ch.name == "source_origin") {
            seen_origin = true;
            CHECK(ch.lhs == 0.0);
            CHECK(ch.rhs == doctest::Approx(-0.5));
            CHECK(ch.holds);
        } else if (ch.name == "source_decay") {
            seen_decay = true;
            CHECK(ch.lhs == -1.0);
            CHECK(ch.rhs == doctest::Approx(-0.5));
            CHECK(ch.holds);
        }
    }
    CHECK(seen_serrin);
    CHECK(seen_integrability);
    CHECK(seen_origin);
    CHECK(seen_decay);
}

TEST_CASE("check_admissible rejections and domain errors") {
    ProblemSpec spec = reference_problem();
    spec.p = 2.5;  // p <= (N+b)/(N-2) = 3
    auto rep = check_admissible(spec, reference_norms());
    CHECK_FALSE(rep.admissible);

    ProblemSpec ten;
    ten.N = 10;
    ten.p = 2.0;
    ten.alpha = CoefficientSpec::one();
    ten.mu = MeasureSpec::uniform_ball(1.0, 1.0);
    SourceNormParams norms{12.0, 0.0, -2.5};
    CHECK(check_admissible(ten, norms).admissible);

    // a <= -2 cannot be built through the validated constructor; a tabulated
    // coefficient carrying that envelope triggers the domain error.
    auto g = RadialGrid::geometric(1e-2, 1e2, 16);
    auto f = RadialFunction::tabulate(g, [](double r) { return std::pow(r, -2.5); }, -2.5, -2.5);
    ProblemSpec bad;
    bad.alpha = CoefficientSpec::tabulated(f);
    bad.mu = MeasureSpec::uniform_ball(1.0, 1.0);
    CHECK_THROWS_AS(check_admissible(bad, reference_norms()), std::domain_error);
}

TEST_CASE("check_uniqueness_range") {
    ProblemSpec spec = reference_problem();
    CHECK(check_uniqueness_range(spec));
    spec.p = 3.1;  // below p_*(0) ≈ 3.18766
    CHECK_FALSE(check_uniqueness_range(spec));
    spec.N = 12;
    spec.p = 4.0;  // above p*(0) ≈ 3.92660
    CHECK_FALSE(check_uniqueness_range(spec));
}

TEST_CASE("kelvin_dual_params formulas and involution") {
    auto d1 = kelvin_dual_params(5, 3.0, 0.0, 0.0, 0.0, -3.0);
    CHECK(d1.a_sharp == 2.0);
    CHECK(d1.b_sharp == 2.0);
    CHECK(d1.c_sharp == 0.0);
    CHECK(d1.d_sharp == -3.0);

    auto d2 = kelvin_dual_params(3, 5.0, 0.0, 0.0, 0.0, -1.0);
    CHECK(d2.a_sharp == 0.0);
    CHECK(d2.b_sharp == 0.0);
    CHECK(d2.c_sharp == 0.0);
    CHECK(d2.d_sharp == -1.0);

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int t = 0; t < 200; ++t) {
        const int N = 3 + static_cast<int>(rng() % 10);
        const double p = 1.5 + 4.0 * std::generate_canonical<double, 53>(rng);
        const double a = U(rng), b = U(rng), c = U(rng), d = U(rng);
        auto s = kelvin_dual_params(N, p, a, b, c, d);
        auto ss = kelvin_dual_params(N, p, s.a_sharp, s.b_sharp, s.c_sharp, s.d_sharp);
        CHECK(ss.a_sharp == doctest::Approx(a).epsilon(1e-14));
        CHECK(ss.b_sharp == doctest::Approx(b).epsilon(1e-14));
        CHECK(ss.c_sharp == doctest::Approx(c).epsilon(1e-14));
        CHECK(ss.d_sharp == doctest::Approx(d).epsilon(1e-14));
    }
}

TEST_CASE("dual params satisfy the closing inequalities when admissible") {
    // (N=3, p=5, a=b=0, r=inf, c=0, d=-1) and (N=10, p=2, r=12, c=0, d=-2.5).
    struct Case {
        int N;
        double p, a, b, c, d;
    };
    for (const Case& t : {Case{3, 5.0, 0.0, 0.0, 0.0, -1.0}, Case{10, 2.0, 0.0, 0.0, 0.0, -2.5}}) {
        auto s = kelvin_dual_params(t.N, t.p, t.a, t.b, t.c, t.d);
        CHECK(s.a_sharp > -2.0);
        CHECK(t.p > (t.N + s.b_sharp) / (t.N - 2.0));
        CHECK(s.c_sharp > -(s.a_sharp + 2.0) / (t.p - 1.0));
        CHECK(s.d_sharp < -(s.b_sharp + 2.0) / (t.p - 1.0));
    }
}
