#include "henon/grid.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace henon {

std::shared_ptr<const RadialGrid> RadialGrid::geometric(double r_min, double r_max, int n) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw std::domain_error("RadialGrid: need 0 < r_min < r_max");
    if (n < 2) throw std::domain_error("RadialGrid: need n >= 2");
    auto g = std::shared_ptr<RadialGrid>(new RadialGrid());
    const double l0 = std::log2(r_min);
    const double l1 = std::log2(r_max);
    g->log2_step_ = (l1 - l0) / (n - 1);
    g->r_.resize(static_cast<size_t>(n));
    g->log2r_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double x = (i == n - 1) ? l1 : l0 + i * g->log2_step_;
        g->log2r_[static_cast<size_t>(i)] = x;
        g->r_[static_cast<size_t>(i)] = std::exp2(x);
    }
    for (int i = 0; i < n; ++i)
        if (g->r_[static_cast<size_t>(i)] == 1.0) g->unit_index_ = i;
    return g;
}

std::shared_ptr<const RadialGrid> RadialGrid::kelvin_symmetric(double r_max, int n) {
    if (!(r_max > 1.0)) throw std::domain_error("RadialGrid: symmetric grid needs r_max > 1");
    if (n < 3 || n % 2 == 0)
        throw std::domain_error("RadialGrid: symmetric grid needs odd n >= 3");
    auto g = std::shared_ptr<RadialGrid>(new RadialGrid());
    const int k = (n - 1) / 2;
    g->log2_step_ = std::log2(r_max) / k;
    g->r_.resize(static_cast<size_t>(n));
    g->log2r_.resize(static_cast<size_t>(n));
    // Mirror construction keeps log2 nodes exactly antisymmetric about r = 1.
    for (int i = 0; i <= k; ++i) {
        const double x = (i == k) ? std::log2(r_max) : i * g->log2_step_;
        g->log2r_[static_cast<size_t>(k + i)] = x;
        g->log2r_[static_cast<size_t>(k - i)] = -x;
        g->r_[static_cast<size_t>(k + i)] = std::exp2(x);
        g->r_[static_cast<size_t>(k - i)] = std::exp2(-x);
    }
    g->kelvin_ = true;
    g->unit_index_ = k;
    return g;
}

int RadialGrid::segment_of(double r) const {
    const double x = std::log2(r);
    int i = static_cast<int>(std::floor((x - log2r_.front()) / log2_step_));
    i = std::clamp(i, 0, size() - 2);
    // Guard against roundoff in the division.
    while (i > 0 && r < r_[static_cast<size_t>(i)]) --i;
    while (i < size() - 2 && r >= r_[static_cast<size_t>(i + 1)]) ++i;
    return i;
}

GridPtr make_grid(double r_min, double r_max, int n, bool kelvin_symmetric) {
    if (n < 16) throw std::domain_error("make_grid: need n >= 16");
    if (kelvin_symmetric) {
        if (!(r_max > 1.0)) throw std::domain_error("make_grid: symmetric grid needs r_max > 1");
        if (n % 2 == 0) throw std::domain_error("make_grid: symmetric grid needs odd n");
        return RadialGrid::kelvin_symmetric(r_max, n);
    }
    if (!(r_min > 0.0) || !(r_min < 1.0) || !(r_max > 1.0) || !(r_min < r_max))
        throw std::domain_error("make_grid: need 0 < r_min < 1 < r_max");
    return RadialGrid::geometric(r_min, r_max, n);
}

GridPtr make_grid(double r_max, int n) { return make_grid(1.0 / r_max, r_max, n, true); }

RadialFunction::RadialFunction(GridPtr grid, std::vector<double> values,
                               double head_exp, double tail_exp)
    : grid_(std::move(grid)), v_(std::move(values)), head_exp_(head_exp), tail_exp_(tail_exp) {
    if (!grid_) throw std::domain_error("RadialFunction: null grid");
    if (static_cast<int>(v_.size()) != grid_->size())
        throw std::domain_error("RadialFunction: value/node count mismatch");
    for (double x : v_) {
        if (!std::isfinite(x)) throw std::domain_error("RadialFunction: non-finite value");
        if (x < 0.0) throw std::domain_error("RadialFunction: negative value");
    }
}

RadialFunction RadialFunction::zero(GridPtr grid, int N) {
    std::vector<double> v(static_cast<size_t>(grid->size()), 0.0);
    return RadialFunction(std::move(grid), std::move(v), 0.0, -(N - 2.0));
}

RadialFunction RadialFunction::constant(GridPtr grid, double value, int N) {
    std::vector<double> v(static_cast<size_t>(grid->size()), value);
    return RadialFunction(std::move(grid), std::move(v), 0.0, -(N - 2.0));
}

double RadialFunction::operator()(double r) const {
    if (!(r > 0.0)) throw std::domain_error("RadialFunction: need r > 0");
    const auto& g = *grid_;
    if (r <= g.r_min()) {
        if (r == g.r_min()) return v_.front();
        return v_.front() * std::pow(r / g.r_min(), head_exp_);
    }
    if (r >= g.r_max()) {
        if (r == g.r_max()) return v_.back();
        return v_.back() * std::pow(r / g.r_max(), tail_exp_);
    }
    const int i = g.segment_of(r);
    const double v0 = v_[static_cast<size_t>(i)];
    const double v1 = v_[static_cast<size_t>(i + 1)];
    if (r == g.node(i)) return v0;
    if (r == g.node(i + 1)) return v1;
    if (v0 <= 0.0 || v1 <= 0.0) return 0.0;
    const double m = std::log(v1 / v0) / std::log(g.node(i + 1) / g.node(i));
    return v0 * std::pow(r / g.node(i), m);
}

RadialFunction lin_combine(double a, const RadialFunction& f,
                           double b, const RadialFunction& g,
                           bool clamp_nonnegative) {
    if (!f.same_grid(g)) throw std::domain_error("lin_combine: functions on different grids");
    std::vector<double> v(static_cast<size_t>(f.size()));
    for (int i = 0; i < f.size(); ++i) {
        double x = a * f.value(i) + b * g.value(i);
        if (clamp_nonnegative && x < 0.0) x = 0.0;
        v[static_cast<size_t>(i)] = x;
    }
    return RadialFunction(f.grid(), std::move(v),
                          std::min(f.head_exp(), g.head_exp()),
                          std::max(f.tail_exp(), g.tail_exp()));
}

double power_chord_integral(double x0, double x1, double v0, double v1, double k) {
    if (!(x1 > x0)) return 0.0;
    if (v0 <= 0.0 || v1 <= 0.0) return 0.0;
    const double L = std::log(x1 / x0);
    const double m = std::log(v1 / v0) / L;
    const double e = k + m + 1.0;
    const double scale = v0 * std::pow(x0, k + 1.0);
    const double eL = e * L;
    if (eL == 0.0) return scale * L;
    return scale * std::expm1(eL) / e;
}

double integrate_power_model(const RadialFunction& f, double a, double b, double k) {
    if (!(a > 0.0) || !(b > a)) throw std::domain_error("integrate_power_model: need 0 < a < b");
    const auto& g = *f.grid();
    double total = 0.0;
    // Breakpoints: a, interior nodes in (a,b), b.  Model evaluation at the
    // endpoints reproduces the segment/extension power law exactly, so the
    // chord through the endpoint values is the model itself.
    double x0 = a;
    double v0 = f(a);
    for (int i = 0; i < g.size(); ++i) {
        const double xn = g.node(i);
        if (xn <= x0) continue;
        if (xn >= b) break;
        const double vn = f.value(i);
        total += power_chord_integral(x0, xn, v0, vn, k);
        x0 = xn;
        v0 = vn;
    }
    total += power_chord_integral(x0, b, v0, f(b), k);
    return total;
}

double omega(const WeightParams& w, double R) {
    if (!(R > 0.0)) throw std::domain_error("omega: need R > 0");
    return (R <= 1.0) ? std::pow(R, w.beta) : std::pow(R, w.gamma);
}

double unit_ball_volume(int N) {
    return std::pow(M_PI, N / 2.0) / std::tgamma(N / 2.0 + 1.0);
}

}  // namespace henon
