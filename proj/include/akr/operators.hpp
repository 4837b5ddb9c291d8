#pragma once

#include "akr/core.hpp"

namespace akr {

/// Node vector (t_{n,k})_{k=0..n} of the operator fixing e_0 and e_j:
/// t_{n,k} = (k(k-1)...(k-j+1) / (n(n-1)...(n-j+1)))^{1/j}.
struct AkrNodes {
    int n = 0;
    int j = 1;
    std::vector<double> nodes;  // size n+1
};

/// Builds the nodes for 1 <= j <= n. Entries k < j are exact 0, entry n is
/// exact 1; the rest are computed as products of ratios in (0,1] (no
/// overflow for any n) followed by a single j-th root.
AkrNodes akr_nodes(int n, int j);

/// A strictly increasing change of variable on [0,1] with explicit inverse.
/// Validated on construction: endpoints, monotonicity and inverse
/// consistency on a 200-point grid.
struct TauSpec {
    std::function<double(double)> tau;
    std::function<double(double)> tau_inverse;

    TauSpec(std::function<double(double)> t, std::function<double(double)> t_inv);
};

/// B_{n,0,j}(f) as a degree-n Bernstein form with coefficients f(t_{n,k}).
BernsteinForm apply_akr(const FunctionHandle& f, int n, int j);

/// Classical Bernstein polynomial B_n(f); equals apply_akr(f, n, 1).
BernsteinForm apply_bernstein(const FunctionHandle& f, int n);

/// Pointwise value B_{n,0,j}(f; x) by direct O(n) summation over the
/// normalized weight vector.
double apply_akr_at(const FunctionHandle& f, int n, int j, double x);

/// B_{n,0,j}(f; x) - f(x), computed as sum_k (f(t_k) - f(x)) p_{n,k}(x).
/// Avoids the cancellation of forming the two values separately; used by
/// the bounds and asymptotics sweeps.
double akr_error_at(const FunctionHandle& f, int n, int j, double x);

/// King's r_n: x^2 for n=1, (-1 + sqrt(1 + 4n(n-1)x^2)) / (2(n-1)) for n>=2.
double king_rn(int n, double x);

/// King operator (B_n f)(r_n(x)). Not a polynomial in general, hence
/// exposed pointwise.
double apply_king(const FunctionHandle& f, int n, double x);

/// tau-modified Bernstein operator: B_n applied to f∘tau^{-1}, evaluated
/// at tau(x). Reproduces e_0 and tau.
double apply_tau(const FunctionHandle& f, const TauSpec& tau, int n, double x);

/// First moment B_{n,0,j}(e_1 - x; x); lies in [-(j-1)/n, 0].
double akr_first_moment(int n, int j, double x);

/// Second moment B_{n,0,j}((e_1 - x)^2; x) >= 0;
/// bounded by x(1-x)/n + 2x(j-1)/n.
double akr_second_moment(int n, int j, double x);

/// d_n(x) = (1-x)(1 - (1-x)^{n-1}), the pointwise first-moment profile
/// for j=2.
double d_n_profile(int n, double x);

}  // namespace akr
