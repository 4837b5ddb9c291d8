#pragma once

#include "akr/core.hpp"

#include <optional>

namespace akr {

/// Result of a modulus-of-smoothness scan: the value and the grid point(s)
/// attaining it. All moduli here are grid brute-force lower bounds of the
/// true supremum; both sides of every verified inequality use the same grid.
struct ModulusResult {
    double value = 0.0;
    double witness_x = 0.0;
    double witness_h = 0.0;
    std::optional<double> witness_a;  // minimizing coefficient, when applicable
};

/// omega_1(f; delta) = sup |f(x+h) - f(x)| over grid pairs with 0 < h <= delta.
ModulusResult omega1(const FunctionHandle& f, double delta, const GridSpec& grid);

/// omega_2(f; delta) = sup |f(x+h) - 2f(x) + f(x-h)|, 0 < h <= delta,
/// x +- h in [0,1]. Requires delta <= 1/2.
ModulusResult omega2(const FunctionHandle& f, double delta, const GridSpec& grid);

/// omega_j^*(f; delta) = inf over a of omega_1(f - a e_j; delta).
/// The objective is convex in a (sup of |affine| functions), located by
/// ternary search and refined to an a-step of 1e-8.
ModulusResult omega_j_star(const FunctionHandle& f, int j, double delta, const GridSpec& grid);

/// First-order Ditzian-Totik modulus with phi(x) = sqrt(x(1-x)):
/// sup over 0 < h <= delta and x with x +- h phi(x)/2 in [0,1] of
/// |f(x + h phi(x)/2) - f(x - h phi(x)/2)|.
ModulusResult omega_phi_1(const FunctionHandle& f, double delta, const GridSpec& grid);

/// inf over a of [omega_2(f - a e_j; delta2) + omega_1(f - a e_j; delta1)].
/// delta1 == 0 is accepted and contributes 0 (the j=1 case).
ModulusResult omega_inf_combined(const FunctionHandle& f, int j, double delta2, double delta1,
                                 const GridSpec& grid);

}  // namespace akr
