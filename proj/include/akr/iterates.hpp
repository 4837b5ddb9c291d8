#pragma once

#include "akr/core.hpp"

namespace akr {

/// Action of B_{n,0,j} on node values: M[i][k] = p_{n,k}(t_{n,i}).
/// Row-stochastic; rows 0 and n are unit vectors (endpoint interpolation).
/// Iterating the operator only requires this matrix, since B_{n,0,j} f
/// depends on f through (f(t_{n,k}))_k alone.
struct IterationMatrix {
    int n = 0;
    int j = 1;
    std::vector<std::vector<double>> rows;  // (n+1) x (n+1)
};

IterationMatrix build_iteration_matrix(int n, int j);

/// Bernstein form of the m-th iterate B_{n,0,j}^m f, m >= 1. Computed by
/// m-1 matrix-vector products on the node-value vector; exact in the sense
/// that no resampling or interpolation is involved.
BernsteinForm iterate_akr(const FunctionHandle& f, int n, int j, int m);

/// Closed-form limit of the iterates: x -> f(0) + (f(1) - f(0)) x^j.
FunctionHandle iterate_limit(const FunctionHandle& f, int j);

/// Sup distances r_m = ||B^m f - B^m g||_inf (over uniform(500)) for
/// m = 1..m_max. Requires f and g to share endpoint values (the invariant
/// class X_{alpha,beta}); each step contracts by at least 1 - 2^{1-n}.
std::vector<double> contraction_report(const FunctionHandle& f, const FunctionHandle& g, int n,
                                       int j, int m_max);

}  // namespace akr
