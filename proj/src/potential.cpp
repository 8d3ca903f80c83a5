#include "henon/potential.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace henon {

RadialFunction newtonian_potential(const RadialFunction& f, int N, const PotentialOptions& opts) {
    if (N < 3) throw std::domain_error("newtonian_potential: need N >= 3");
    const auto& g = *f.grid();
    const int n = g.size();
    const double Nm2 = N - 2.0;

    double head = 0.0;
    const bool has_head = opts.include_head && f.value(0) > 0.0;
    if (has_head) {
        if (!(f.head_exp() + N > 0.0))
            throw std::runtime_error(
                "newtonian_potential: head integral diverges (need head_exp + N > 0)");
        head = f.value(0) * std::pow(g.r_min(), N) / (N + f.head_exp());
    }
    double tail = 0.0;
    const bool has_tail = opts.include_tail && f.value(n - 1) > 0.0;
    if (has_tail) {
        if (!(f.tail_exp() + 2.0 < 0.0))
            throw std::runtime_error(
                "newtonian_potential: tail integral diverges (need tail_exp + 2 < 0)");
        tail = f.value(n - 1) * g.r_max() * g.r_max() / (-(f.tail_exp() + 2.0));
    }

    // Per-segment moments, then prefix/suffix sums.
    std::vector<double> inner(static_cast<size_t>(n - 1)), outer(static_cast<size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) {
        inner[static_cast<size_t>(i)] =
            power_chord_integral(g.node(i), g.node(i + 1), f.value(i), f.value(i + 1), N - 1.0);
        outer[static_cast<size_t>(i)] =
            power_chord_integral(g.node(i), g.node(i + 1), f.value(i), f.value(i + 1), 1.0);
    }
    std::vector<double> out(static_cast<size_t>(n));
    std::vector<double> suffix(static_cast<size_t>(n));  // ∫_{r_j}^∞ s f ds
    suffix[static_cast<size_t>(n - 1)] = tail;
    for (int j = n - 2; j >= 0; --j)
        suffix[static_cast<size_t>(j)] = suffix[static_cast<size_t>(j + 1)] + outer[static_cast<size_t>(j)];
    double P = head;  // ∫_0^{r_j} s^{N-1} f ds
    for (int j = 0; j < n; ++j) {
        if (j > 0) P += inner[static_cast<size_t>(j - 1)];
        out[static_cast<size_t>(j)] =
            (std::pow(g.node(j), -Nm2) * P + suffix[static_cast<size_t>(j)]) / Nm2;
    }

    const double out_head = has_head ? std::min(f.head_exp() + 2.0, 0.0) : 0.0;
    const double out_tail = has_tail ? std::max(f.tail_exp() + 2.0, -Nm2) : -Nm2;
    return RadialFunction(f.grid(), std::move(out), out_head, out_tail);
}

RadialFunction potential_of_measure(const MeasureSpec& mu, int N, const GridPtr& grid) {
    if (N < 3) throw std::domain_error("potential_of_measure: need N >= 3");
    const double Nm2 = N - 2.0;
    switch (mu.kind) {
        case MeasureSpec::Kind::UniformBall: {
            if (!(mu.mass > 0.0))
                throw std::domain_error("potential_of_measure: μ must be nontrivial");
            const double R0 = mu.radius;
            const double rho0 = mu.mass / (unit_ball_volume(N) * std::pow(R0, N));
            auto val = [&](double r) {
                if (r <= R0) return rho0 * (R0 * R0 / (2.0 * Nm2) - r * r / (2.0 * N));
                return rho0 * std::pow(R0, N) / (N * Nm2) * std::pow(r, -Nm2);
            };
            return RadialFunction::tabulate(grid, val, 0.0, -Nm2);
        }
        case MeasureSpec::Kind::SphereShell: {
            if (!(mu.mass > 0.0))
                throw std::domain_error("potential_of_measure: μ must be nontrivial");
            const double c = mu.mass / (N * Nm2 * unit_ball_volume(N));
            auto val = [&](double r) { return c * std::pow(std::max(r, mu.radius), -Nm2); };
            return RadialFunction::tabulate(grid, val, 0.0, -Nm2);
        }
        case MeasureSpec::Kind::RadialDensity: {
            const RadialFunction& rho = *mu.density;
            double total = integrate_power_model(rho, rho.grid()->r_min(), rho.grid()->r_max(),
                                                 N - 1.0);
            if (!(total > 0.0))
                throw std::domain_error("potential_of_measure: μ must be nontrivial");
            RadialFunction pot = newtonian_potential(rho, N);
            if (pot.grid() == grid) return pot;
            return RadialFunction::tabulate(grid, [&](double r) { return pot(r); },
                                            pot.head_exp(), pot.tail_exp());
        }
    }
    throw std::domain_error("potential_of_measure: unknown measure kind");
}

}  // namespace henon
