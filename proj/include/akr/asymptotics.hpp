#pragma once

#include "akr/core.hpp"

namespace akr {

/// Scaled errors n (B_{n,0,j}(f; x) - f(x)) along an increasing n list,
/// with the asymptotic target and a Richardson-extrapolated estimate.
struct VoronovskayaTrace {
    std::string f_id;
    int j = 1;
    double x = 0.0;
    std::vector<int> n_list;
    std::vector<double> scaled_errors;
    double extrapolated = 0.0;
    double target = 0.0;
};

/// The limit of n (B_{n,0,j}(f; x) - f(x)):
/// x(1-x)/2 f''(x) - (j-1)(1-x)/2 f'(x). Needs exact derivatives.
double voronovskaya_target(const FunctionHandle& f, int j, double x);

/// Computes the scaled errors over n_list and extrapolates from the last
/// two entries of a doubling list under the error model a + b/n:
/// extrapolated = 2 s(2n) - s(n).
VoronovskayaTrace voronovskaya_trace(const FunctionHandle& f, int j, double x,
                                     const std::vector<int>& n_list);

/// |n(B f - f)(x) - f'(x) n mu_1(x) - f''(x)/2 n mu_2(x)| with the first and
/// second moments mu_1, mu_2 of B_{n,0,j} at x. Vanishes for polynomials of
/// degree <= 2.
double pre_voronovskaya_residual(const FunctionHandle& f, int n, int j, double x);

/// Empirical lower bound on the constant C of the pre-Voronovskaya
/// estimate: max over the sweep of residual / omega_phi_1(f''; 1/sqrt(n)),
/// skipping cells with denominator below 1e-12. Throws std::runtime_error
/// if every cell is skipped.
double estimate_finta_constant(const std::vector<FunctionHandle>& f_set, int j,
                               const std::vector<int>& n_list, const std::vector<double>& x_grid,
                               const GridSpec& modulus_grid);

}  // namespace akr
