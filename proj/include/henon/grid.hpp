// Log-spaced radial grids and radial functions with power-law head/tail
// extensions.  A RadialFunction is the piecewise power-law interpolant of
// nonnegative node values (linear in log f vs log r), extended below r_min
// by v0*(r/r_min)^head_exp and above r_max by v_last*(r/r_max)^tail_exp.
#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <vector>

namespace henon {

class RadialGrid {
public:
    // Plain geometric grid, n >= 2 nodes from r_min to r_max.
    static std::shared_ptr<const RadialGrid> geometric(double r_min, double r_max, int n);

    // Inversion-closed grid on [1/r_max, r_max]; n odd puts r = 1 at the
    // center node, which Kelvin operations require.
    static std::shared_ptr<const RadialGrid> kelvin_symmetric(double r_max, int n);

    int size() const { return static_cast<int>(r_.size()); }
    double r_min() const { return r_.front(); }
    double r_max() const { return r_.back(); }
    double node(int i) const { return r_[i]; }
    double log2_node(int i) const { return log2r_[i]; }
    const std::vector<double>& nodes() const { return r_; }
    double log2_step() const { return log2_step_; }
    bool is_kelvin_symmetric() const { return kelvin_; }
    int unit_index() const { return unit_index_; }  // -1 if r = 1 is not a node

    // Index of the segment [r_i, r_{i+1}] containing r, clamped to [0, n-2].
    int segment_of(double r) const;

private:
    RadialGrid() = default;
    std::vector<double> r_;
    std::vector<double> log2r_;
    double log2_step_ = 0.0;
    bool kelvin_ = false;
    int unit_index_ = -1;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

// Spec'd constructor with production preconditions: 0 < r_min < 1 < r_max and
// n >= 16.  In the symmetric case r_min is derived as 1/r_max and n must be
// odd.  Throws std::domain_error on bad arguments.
GridPtr make_grid(double r_min, double r_max, int n, bool kelvin_symmetric);
GridPtr make_grid(double r_max, int n);  // symmetric convenience overload

class RadialFunction {
public:
    RadialFunction() = default;
    RadialFunction(GridPtr grid, std::vector<double> values,
                   double head_exp, double tail_exp);

    // All-zero / all-constant functions on a grid.
    static RadialFunction zero(GridPtr grid, int N);
    static RadialFunction constant(GridPtr grid, double value, int N);

    // Tabulate fn(r) at the nodes.
    template <class F>
    static RadialFunction tabulate(GridPtr grid, F&& fn, double head_exp, double tail_exp) {
        std::vector<double> v(grid->size());
        for (int i = 0; i < grid->size(); ++i) v[static_cast<size_t>(i)] = fn(grid->node(i));
        return RadialFunction(std::move(grid), std::move(v), head_exp, tail_exp);
    }

    const GridPtr& grid() const { return grid_; }
    const std::vector<double>& values() const { return v_; }
    double value(int i) const { return v_[static_cast<size_t>(i)]; }
    double& value(int i) { return v_[static_cast<size_t>(i)]; }
    int size() const { return static_cast<int>(v_.size()); }
    double head_exp() const { return head_exp_; }
    double tail_exp() const { return tail_exp_; }
    void set_head_exp(double e) { head_exp_ = e; }
    void set_tail_exp(double e) { tail_exp_ = e; }

    // Model evaluation: power interpolation inside the grid, power extension
    // outside.  A segment with a zero endpoint evaluates to 0 on its open
    // interior (the power-law limit), and to the node value at the node.
    double operator()(double r) const;

    bool same_grid(const RadialFunction& other) const { return grid_ == other.grid_; }

private:
    GridPtr grid_;
    std::vector<double> v_;
    double head_exp_ = 0.0;
    double tail_exp_ = 0.0;
};

// Nodewise linear combination a*f + b*g on a shared grid.  Head/tail
// exponents of the result are the dominant ones (min of heads, max of tails);
// negatives produced by roundoff in differences are clamped to 0 when
// clamp_nonnegative is set.
RadialFunction lin_combine(double a, const RadialFunction& f,
                           double b, const RadialFunction& g,
                           bool clamp_nonnegative = false);

// ∫_{x0}^{x1} s^k f(s) ds where f is the power-law chord through (x0,v0) and
// (x1,v1); exact closed form, logarithmic branch included.  Zero/negative
// endpoint values make the chord vanish (power-law limit convention).
double power_chord_integral(double x0, double x1, double v0, double v1, double k);

// ∫_a^b s^k f(s) ds of the full piecewise model, extensions included.
double integrate_power_model(const RadialFunction& f, double a, double b, double k);

// Two-branch weight ω_{β,γ}(R) = R^β for R ≤ 1, R^γ for R > 1.
struct WeightParams {
    double beta = 0.0;
    double gamma = 0.0;
};

double omega(const WeightParams& w, double R);

// Volume of the unit ball in R^N.
double unit_ball_volume(int N);

}  // namespace henon
