#include "akr/iterates.hpp"

#include "akr/operators.hpp"

#include <cmath>

namespace akr {

IterationMatrix build_iteration_matrix(int n, int j) {
    const AkrNodes nd = akr_nodes(n, j);
    IterationMatrix m;
    m.n = n;
    m.j = j;
    m.rows.resize(n + 1);
    for (int i = 0; i <= n; ++i) m.rows[i] = bernstein_weights(n, nd.nodes[i]);
    return m;
}

BernsteinForm iterate_akr(const FunctionHandle& f, int n, int j, int m) {
    if (m < 1) throw std::invalid_argument("iterate_akr: m must be >= 1");
    const IterationMatrix mat = build_iteration_matrix(n, j);
    const AkrNodes nd = akr_nodes(n, j);
    std::vector<double> v(n + 1), next(n + 1);
    for (int k = 0; k <= n; ++k) v[k] = f.eval(nd.nodes[k]);
    for (int step = 1; step < m; ++step) {
        for (int i = 0; i <= n; ++i) {
            double s = 0.0;
            for (int k = 0; k <= n; ++k) s += mat.rows[i][k] * v[k];
            next[i] = s;
        }
        v.swap(next);
    }
    return BernsteinForm(n, std::move(v));
}

FunctionHandle iterate_limit(const FunctionHandle& f, int j) {
    const double f0 = f.eval(0.0);
    const double f1 = f.eval(1.0);
    FunctionHandle lim;
    lim.id = f.id + "_limit_j" + std::to_string(j);
    lim.smoothness = Smoothness::Analytic;
    lim.eval = [f0, f1, j](double x) { return f0 + (f1 - f0) * std::pow(x, j); };
    lim.d1 = [f0, f1, j](double x) { return j == 0 ? 0.0 : (f1 - f0) * j * std::pow(x, j - 1); };
    lim.d2 = [f0, f1, j](double x) {
        return j < 2 ? 0.0 : (f1 - f0) * j * (j - 1) * std::pow(x, j - 2);
    };
    return lim;
}

std::vector<double> contraction_report(const FunctionHandle& f, const FunctionHandle& g, int n,
                                       int j, int m_max) {
    if (m_max < 1) throw std::invalid_argument("contraction_report: m_max must be >= 1");
    if (std::abs(f.eval(0.0) - g.eval(0.0)) > 1e-12 || std::abs(f.eval(1.0) - g.eval(1.0)) > 1e-12)
        throw std::invalid_argument(
            "contraction_report: f and g must share endpoint values (same X_{alpha,beta})");
    const IterationMatrix mat = build_iteration_matrix(n, j);
    const AkrNodes nd = akr_nodes(n, j);
    std::vector<double> vf(n + 1), vg(n + 1), next(n + 1);
    for (int k = 0; k <= n; ++k) {
        vf[k] = f.eval(nd.nodes[k]);
        vg[k] = g.eval(nd.nodes[k]);
    }
    const GridSpec grid = GridSpec::uniform(500);
    std::vector<double> r;
    r.reserve(m_max);
    std::vector<double> diff(n + 1);
    for (int m = 1; m <= m_max; ++m) {
        auto advance = [&](std::vector<double>& v) {
            for (int i = 0; i <= n; ++i) {
                double s = 0.0;
                for (int k = 0; k <= n; ++k) s += mat.rows[i][k] * v[k];
                next[i] = s;
            }
            v.swap(next);
        };
        advance(vf);
        advance(vg);
        for (int k = 0; k <= n; ++k) diff[k] = vf[k] - vg[k];
        const BernsteinForm d(n, diff);
        double sup = 0.0;
        for (double x : grid.points) sup = std::max(sup, std::abs(eval_bernstein_form(d, x)));
        r.push_back(sup);
    }
    return r;
}

}  // namespace akr
