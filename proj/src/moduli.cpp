#include "akr/moduli.hpp"

#include <cmath>

namespace akr {

namespace {

// Slack when comparing grid differences against delta, so that e.g.
// h = 100/1000 counts as <= 0.1 despite rounding.
constexpr double kHTol = 1e-12;

std::vector<double> sample(const FunctionHandle& f, const GridSpec& grid) {
    std::vector<double> v(grid.points.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = f.eval(grid.points[i]);
    return v;
}

ModulusResult omega1_values(const std::vector<double>& v, const std::vector<double>& pts,
                            double delta) {
    ModulusResult r;
    const size_t m = pts.size();
    for (size_t i = 0; i < m; ++i) {
        for (size_t k = i + 1; k < m; ++k) {
            const double h = pts[k] - pts[i];
            if (h > delta + kHTol) break;
            const double d = std::abs(v[k] - v[i]);
            if (d > r.value) { r.value = d; r.witness_x = pts[i]; r.witness_h = h; }
        }
    }
    return r;
}

ModulusResult omega2_values(const std::vector<double>& v, const std::vector<double>& pts,
                            double delta) {
    ModulusResult r;
    const size_t m = pts.size();
    for (size_t i = 1; i + 1 < m; ++i) {
        for (size_t d = 1; d <= i && i + d < m; ++d) {
            const double hl = pts[i] - pts[i - d];
            const double hr = pts[i + d] - pts[i];
            if (hr > delta + kHTol || hl > delta + kHTol) break;
            if (std::abs(hl - hr) > kHTol) continue;  // need a symmetric step
            const double s = std::abs(v[i + d] - 2.0 * v[i] + v[i - d]);
            if (s > r.value) { r.value = s; r.witness_x = pts[i]; r.witness_h = hr; }
        }
    }
    return r;
}

// Minimizes a convex objective over a in [-B, B] by ternary search down to
// an interval of 1e-8, then evaluates at the midpoint.
template <typename Objective>
double minimize_convex(double bracket, Objective&& obj, double* a_out) {
    double lo = -bracket, hi = bracket;
    while (hi - lo > 1e-8) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (obj(m1) <= obj(m2)) hi = m2; else lo = m1;
    }
    *a_out = 0.5 * (lo + hi);
    return obj(*a_out);
}

double coefficient_bracket(const std::vector<double>& v) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    return 1.0 + 10.0 * mx;
}

void shift_by_monomial(const std::vector<double>& v, const std::vector<double>& gj, double a,
                       std::vector<double>& out) {
    out.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] - a * gj[i];
}

std::vector<double> monomial_values(const GridSpec& grid, int j) {
    std::vector<double> gj(grid.points.size());
    for (size_t i = 0; i < gj.size(); ++i) gj[i] = std::pow(grid.points[i], j);
    return gj;
}

}  // namespace

ModulusResult omega1(const FunctionHandle& f, double delta, const GridSpec& grid) {
    if (!(delta > 0.0) || delta > 1.0) throw std::invalid_argument("omega1: need 0 < delta <= 1");
    ModulusResult r = omega1_values(sample(f, grid), grid.points, delta);
    // Grid pairs quantize h below delta; also try the full step h = delta
    // anchored at every grid point, where the sup is typically attained.
    for (double x : grid.points) {
        if (x + delta > 1.0) break;
        const double d = std::abs(f.eval(x + delta) - f.eval(x));
        if (d > r.value) { r.value = d; r.witness_x = x; r.witness_h = delta; }
    }
    return r;
}

ModulusResult omega2(const FunctionHandle& f, double delta, const GridSpec& grid) {
    if (!(delta > 0.0) || delta > 0.5)
        throw std::invalid_argument("omega2: need 0 < delta <= 1/2");
    ModulusResult r = omega2_values(sample(f, grid), grid.points, delta);
    // As in omega1: symmetric second differences with the full step delta.
    for (double x : grid.points) {
        if (x - delta < 0.0) continue;
        if (x + delta > 1.0) break;
        const double s = std::abs(f.eval(x + delta) - 2.0 * f.eval(x) + f.eval(x - delta));
        if (s > r.value) { r.value = s; r.witness_x = x; r.witness_h = delta; }
    }
    return r;
}

ModulusResult omega_j_star(const FunctionHandle& f, int j, double delta, const GridSpec& grid) {
    if (j < 1) throw std::invalid_argument("omega_j_star: j must be >= 1");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("omega_j_star: need 0 < delta <= 1");
    const std::vector<double> v = sample(f, grid);
    const std::vector<double> gj = monomial_values(grid, j);
    std::vector<double> shifted;
    const auto objective = [&](double a) {
        shift_by_monomial(v, gj, a, shifted);
        return omega1_values(shifted, grid.points, delta).value;
    };
    double a_best = 0.0;
    minimize_convex(coefficient_bracket(v), objective, &a_best);
    shift_by_monomial(v, gj, a_best, shifted);
    ModulusResult r = omega1_values(shifted, grid.points, delta);
    r.witness_a = a_best;
    return r;
}

ModulusResult omega_phi_1(const FunctionHandle& f, double delta, const GridSpec& grid) {
    if (!(delta > 0.0)) throw std::invalid_argument("omega_phi_1: need delta > 0");
    const int m = grid.size() - 1;
    const int steps = std::max(1, std::min(m, static_cast<int>(std::ceil(delta * m))));
    ModulusResult r;
    for (double x : grid.points) {
        const double phi = std::sqrt(x * (1.0 - x));
        if (phi == 0.0) continue;
        for (int t = steps; t >= 1; --t) {
            const double h = delta * t / steps;
            const double lo = x - 0.5 * h * phi;
            const double hi = x + 0.5 * h * phi;
            if (lo < 0.0 || hi > 1.0) continue;  // admissibility, not clamping
            const double d = std::abs(f.eval(hi) - f.eval(lo));
            if (d > r.value) { r.value = d; r.witness_x = x; r.witness_h = h; }
        }
    }
    return r;
}

ModulusResult omega_inf_combined(const FunctionHandle& f, int j, double delta2, double delta1,
                                 const GridSpec& grid) {
    if (j < 1) throw std::invalid_argument("omega_inf_combined: j must be >= 1");
    if (!(delta2 > 0.0) || delta2 > 0.5)
        throw std::invalid_argument("omega_inf_combined: need 0 < delta2 <= 1/2");
    if (delta1 < 0.0 || delta1 > 1.0)
        throw std::invalid_argument("omega_inf_combined: need 0 <= delta1 <= 1");
    const std::vector<double> v = sample(f, grid);
    const std::vector<double> gj = monomial_values(grid, j);
    std::vector<double> shifted;
    const auto objective = [&](double a) {
        shift_by_monomial(v, gj, a, shifted);
        double s = omega2_values(shifted, grid.points, delta2).value;
        if (delta1 > 0.0) s += omega1_values(shifted, grid.points, delta1).value;
        return s;
    };
    double a_best = 0.0;
    ModulusResult r;
    r.value = minimize_convex(coefficient_bracket(v), objective, &a_best);
    shift_by_monomial(v, gj, a_best, shifted);
    const ModulusResult w2 = omega2_values(shifted, grid.points, delta2);
    r.witness_x = w2.witness_x;
    r.witness_h = w2.witness_h;
    r.witness_a = a_best;
    return r;
}

}  // namespace akr
