#include "akr/operators.hpp"

#include <cmath>

namespace akr {

AkrNodes akr_nodes(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("akr_nodes: require n >= j >= 1");
    AkrNodes out;
    out.n = n;
    out.j = j;
    out.nodes.assign(n + 1, 0.0);
    for (int k = j; k < n; ++k) {
        // every factor lies in (0,1], so the product neither overflows nor
        // underflows; for j=1 this is a single correctly rounded division
        double r = 1.0;
        for (int i = 0; i < j; ++i) r *= static_cast<double>(k - i) / (n - i);
        out.nodes[k] = j == 1 ? r : std::pow(r, 1.0 / j);
    }
    out.nodes[n] = 1.0;
    return out;
}

TauSpec::TauSpec(std::function<double(double)> t, std::function<double(double)> t_inv)
    : tau(std::move(t)), tau_inverse(std::move(t_inv)) {
    if (!tau || !tau_inverse) throw std::invalid_argument("TauSpec: both maps required");
    if (std::abs(tau(0.0)) > 1e-12 || std::abs(tau(1.0) - 1.0) > 1e-12)
        throw std::invalid_argument("TauSpec: require tau(0)=0 and tau(1)=1");
    double prev = tau(0.0);
    for (int i = 1; i <= 200; ++i) {
        const double x = i / 200.0;
        const double tx = tau(x);
        if (!(tx > prev)) throw std::invalid_argument("TauSpec: tau not strictly increasing");
        if (std::abs(tau_inverse(tx) - x) > 1e-8)
            throw std::invalid_argument("TauSpec: tau_inverse is not the inverse of tau");
        prev = tx;
    }
}

BernsteinForm apply_akr(const FunctionHandle& f, int n, int j) {
    const AkrNodes nd = akr_nodes(n, j);
    std::vector<double> coeffs(n + 1);
    for (int k = 0; k <= n; ++k) coeffs[k] = f.eval(nd.nodes[k]);
    return BernsteinForm(n, std::move(coeffs));
}

BernsteinForm apply_bernstein(const FunctionHandle& f, int n) {
    return apply_akr(f, n, 1);
}

double apply_akr_at(const FunctionHandle& f, int n, int j, double x) {
    const AkrNodes nd = akr_nodes(n, j);
    const std::vector<double> w = bernstein_weights(n, x);
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        if (w[k] != 0.0) s += f.eval(nd.nodes[k]) * w[k];
    return s;
}

double akr_error_at(const FunctionHandle& f, int n, int j, double x) {
    if (x == 0.0 || x == 1.0) return 0.0;  // endpoint interpolation
    const AkrNodes nd = akr_nodes(n, j);
    const std::vector<double> w = bernstein_weights(n, x);
    const double fx = f.eval(x);
    long double s = 0.0L;  // scaled by n downstream, so keep extra headroom
    for (int k = 0; k <= n; ++k)
        if (w[k] != 0.0) s += static_cast<long double>(f.eval(nd.nodes[k]) - fx) * w[k];
    return static_cast<double>(s);
}

double king_rn(int n, double x) {
    if (n < 1) throw std::invalid_argument("king_rn: n must be >= 1");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("king_rn: need x in [0,1]");
    if (n == 1) return x * x;
    return (-1.0 + std::sqrt(1.0 + 4.0 * n * (n - 1.0) * x * x)) / (2.0 * (n - 1.0));
}

double apply_king(const FunctionHandle& f, int n, double x) {
    const double r = std::min(1.0, king_rn(n, x));
    const std::vector<double> w = bernstein_weights(n, r);
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        if (w[k] != 0.0) s += f.eval(static_cast<double>(k) / n) * w[k];
    return s;
}

double apply_tau(const FunctionHandle& f, const TauSpec& tau, int n, double x) {
    if (n < 1) throw std::invalid_argument("apply_tau: n must be >= 1");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("apply_tau: need x in [0,1]");
    const double tx = std::min(1.0, std::max(0.0, tau.tau(x)));
    const std::vector<double> w = bernstein_weights(n, tx);
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        if (w[k] != 0.0) s += f.eval(tau.tau_inverse(static_cast<double>(k) / n)) * w[k];
    return s;
}

double akr_first_moment(int n, int j, double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("akr_first_moment: need x in [0,1]");
    const AkrNodes nd = akr_nodes(n, j);
    const std::vector<double> w = bernstein_weights(n, x);
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        if (w[k] != 0.0) s += (nd.nodes[k] - x) * w[k];
    return s;
}

double akr_second_moment(int n, int j, double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("akr_second_moment: need x in [0,1]");
    const AkrNodes nd = akr_nodes(n, j);
    const std::vector<double> w = bernstein_weights(n, x);
    double s = 0.0;
    for (int k = 0; k <= n; ++k)
        if (w[k] != 0.0) s += (nd.nodes[k] - x) * (nd.nodes[k] - x) * w[k];
    return s;
}

double d_n_profile(int n, double x) {
    if (n < 2) throw std::invalid_argument("d_n_profile: n must be >= 2");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("d_n_profile: need x in [0,1]");
    const double u = 1.0 - x;
    return u * (1.0 - std::pow(u, n - 1));
}

}  // namespace akr
