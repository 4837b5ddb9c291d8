#include "akr/asymptotics.hpp"

#include "akr/moduli.hpp"
#include "akr/operators.hpp"

#include <cmath>

namespace akr {

namespace {

void require_derivatives(const FunctionHandle& f, const char* who) {
    if (!f.has_d1() || !f.has_d2())
        throw std::runtime_error(std::string(who) + ": function '" + f.id +
                                 "' lacks exact derivatives");
}

FunctionHandle second_derivative_handle(const FunctionHandle& f) {
    FunctionHandle g;
    g.id = f.id + "_d2";
    g.smoothness = Smoothness::C0;
    g.eval = f.d2;
    return g;
}

}  // namespace

double voronovskaya_target(const FunctionHandle& f, int j, double x) {
    require_derivatives(f, "voronovskaya_target");
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("voronovskaya_target: need x in (0,1)");
    return 0.5 * x * (1.0 - x) * f.d2(x) - 0.5 * (j - 1) * (1.0 - x) * f.d1(x);
}

VoronovskayaTrace voronovskaya_trace(const FunctionHandle& f, int j, double x,
                                     const std::vector<int>& n_list) {
    VoronovskayaTrace tr;
    tr.f_id = f.id;
    tr.j = j;
    tr.x = x;
    tr.target = voronovskaya_target(f, j, x);
    if (n_list.size() < 2) throw std::invalid_argument("voronovskaya_trace: need >= 2 n values");
    int prev = 0;
    for (int n : n_list) {
        if (n < j) throw std::invalid_argument("voronovskaya_trace: every n must be >= j");
        if (n <= prev) throw std::invalid_argument("voronovskaya_trace: n_list must increase");
        prev = n;
        tr.n_list.push_back(n);
        tr.scaled_errors.push_back(n * akr_error_at(f, n, j, x));
    }
    const size_t last = tr.scaled_errors.size() - 1;
    tr.extrapolated = 2.0 * tr.scaled_errors[last] - tr.scaled_errors[last - 1];
    return tr;
}

double pre_voronovskaya_residual(const FunctionHandle& f, int n, int j, double x) {
    require_derivatives(f, "pre_voronovskaya_residual");
    if (j < 1 || n < j)
        throw std::invalid_argument("pre_voronovskaya_residual: require n >= j >= 1");
    const double err = akr_error_at(f, n, j, x);
    const double mu1 = akr_first_moment(n, j, x);
    const double mu2 = akr_second_moment(n, j, x);
    // B(x e_0 - e_1; x) = -mu_1
    return std::abs(n * (err - f.d1(x) * mu1 - 0.5 * f.d2(x) * mu2));
}

double estimate_finta_constant(const std::vector<FunctionHandle>& f_set, int j,
                               const std::vector<int>& n_list, const std::vector<double>& x_grid,
                               const GridSpec& modulus_grid) {
    double best = 0.0;
    bool any = false;
    for (const auto& f : f_set) {
        require_derivatives(f, "estimate_finta_constant");
        const FunctionHandle fpp = second_derivative_handle(f);
        for (int n : n_list) {
            const double omega =
                omega_phi_1(fpp, 1.0 / std::sqrt(static_cast<double>(n)), modulus_grid).value;
            if (omega < 1e-12) continue;
            for (double x : x_grid) {
                best = std::max(best, pre_voronovskaya_residual(f, n, j, x) / omega);
                any = true;
            }
        }
    }
    if (!any)
        throw std::runtime_error(
            "estimate_finta_constant: every sweep cell skipped (denominator < 1e-12)");
    return best;
}

}  // namespace akr
