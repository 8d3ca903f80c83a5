#include "henon/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace henon {

namespace {

// ess-sup of the model over the annulus (a, b): piecewise power pieces attain
// their sup at (clipped) endpoints; zero-endpoint segments are 0 on their
// open interior and do not contribute isolated node spikes.
double annulus_sup(const RadialFunction& f, double a, double b) {
    const auto& g = *f.grid();
    double s = 0.0;
    double x0 = a;
    for (int i = 0; i <= g.size(); ++i) {
        double x1;
        if (i < g.size()) {
            x1 = g.node(i);
            if (x1 <= x0) continue;
            if (x1 > b) x1 = b;
        } else {
            x1 = b;
        }
        if (x1 <= x0) break;
        const double vl = f(x0 * std::sqrt(x1 / x0));  // interior sample decides positivity
        if (vl > 0.0) s = std::max({s, f(x0), f(x1)});
        if (x1 >= b) break;
        x0 = x1;
    }
    return s;
}

}  // namespace

double weighted_norm(const RadialFunction& f, int N, double q, const WeightParams& w) {
    if (!(q >= 1.0)) throw std::domain_error("weighted_norm: need q >= 1");
    if (N < 3) throw std::domain_error("weighted_norm: need N >= 3");
    const auto& g = *f.grid();
    const bool sup_norm = std::isinf(q);
    const double surf = N * unit_ball_volume(N);

    int k_min = static_cast<int>(std::ceil(std::log2(2.0 * g.r_min()) - 1e-9));
    int k_max = static_cast<int>(std::floor(std::log2(g.r_max()) + 1e-9));
    if (k_min > k_max) k_min = k_max;  // degenerate narrow grid: single annulus

    double best = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        const double R = std::exp2(static_cast<double>(k));
        double val;
        if (sup_norm) {
            val = annulus_sup(f, R / 2.0, R);
        } else {
            // (∫ N ω_N s^{N-1} f^q ds)^{1/q}; f^q is again piecewise power, so
            // chord integration of the q-th-power endpoint values is exact.
            const auto& base = f;
            auto fq = [&](double r) { return std::pow(base(r), q); };
            // Integrate via breakpoints at nodes, as integrate_power_model does,
            // but on the q-th power of the model.
            double total = 0.0;
            double x0 = R / 2.0;
            double v0 = fq(x0);
            for (int i = 0; i < g.size(); ++i) {
                const double xn = g.node(i);
                if (xn <= x0) continue;
                if (xn >= R) break;
                const double vn = std::pow(base.value(i), q);
                total += power_chord_integral(x0, xn, v0, vn, N - 1.0);
                x0 = xn;
                v0 = vn;
            }
            total += power_chord_integral(x0, R, v0, fq(R), N - 1.0);
            val = std::pow(surf * total, 1.0 / q);
            val *= std::exp2(-static_cast<double>(k) * N / q);
        }
        val /= omega(w, R);
        best = std::max(best, val);
    }
    return best;
}

}  // namespace henon
