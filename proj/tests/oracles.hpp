// Test-only oracles, independent of the library's evaluation paths:
// exact big-integer/rational arithmetic and high-precision summation.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <vector>

namespace oracles {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline BigInt binomial(int n, int k) {
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return num / den;
}

// p_{n,k}(p/q) as an exact rational.
inline BigRat bernstein_exact(int n, int k, const BigRat& x) {
    BigRat r = BigRat(binomial(n, k));
    for (int i = 0; i < k; ++i) r *= x;
    const BigRat one_minus = 1 - x;
    for (int i = 0; i < n - k; ++i) r *= one_minus;
    return r;
}

// High-precision node t_{n,k}^j.
inline BigFloat akr_node_hp(int n, int j, int k) {
    if (k < j) return 0;
    BigRat prod = 1;
    for (int i = 0; i < j; ++i) prod *= BigRat(k - i, n - i);
    return boost::multiprecision::pow(BigFloat(prod), BigFloat(1) / j);
}

// High-precision B_{n,0,j}(f; x) for a double-valued f evaluated at
// high-precision nodes (f itself is evaluated through a callable taking
// BigFloat, so the node accuracy carries through).
template <typename F>
BigFloat akr_apply_hp(F&& f, int n, int j, const BigRat& x) {
    BigFloat s = 0;
    for (int k = 0; k <= n; ++k)
        s += f(akr_node_hp(n, j, k)) * BigFloat(bernstein_exact(n, k, x));
    return s;
}

// Direct double-precision summation with log-space basis values; used to
// cross-check the de Casteljau path.
inline double direct_sum(const std::vector<double>& coeffs, double x,
                         double (*basis)(int, int, double)) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    double s = 0.0;
    for (int k = 0; k <= n; ++k) s += coeffs[k] * basis(n, k, x);
    return s;
}

}  // namespace oracles
