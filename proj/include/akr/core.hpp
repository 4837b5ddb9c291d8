#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace akr {

enum class Smoothness { C0, C1, C2, Analytic };

std::string to_string(Smoothness s);

/// An evaluable real function on [0,1], optionally carrying exact first and
/// second derivatives. Immutable after construction; cheap to copy and safe
/// to share across threads.
struct FunctionHandle {
    std::string id;
    std::function<double(double)> eval;
    std::function<double(double)> d1;  // empty if unavailable
    std::function<double(double)> d2;  // empty if unavailable
    Smoothness smoothness = Smoothness::C0;

    bool has_d1() const { return static_cast<bool>(d1); }
    bool has_d2() const { return static_cast<bool>(d2); }
};

/// Checks that supplied derivatives agree with finite differences of eval
/// at interior grid points. Throws std::invalid_argument on mismatch.
/// d1 is checked against centered differences of eval (h = 1e-5); d2, when
/// present, against centered differences of d1 (the second difference of
/// eval has a rounding floor of about 1e-5 which would drown the tolerance).
void validate_derivatives(const FunctionHandle& f);

/// The monomial e_j(x) = x^j with exact derivatives.
FunctionHandle monomial(int j);

/// The fixed test corpus: monomials e_0..e_4, exp, sin(pi x), a Runge-type
/// rational, |x-1/2|, x^{3/2} and a piecewise-linear hat. Every member has
/// passed the derivative-consistency check.
const std::vector<FunctionHandle>& builtin_corpus();

/// Looks up a corpus member by id; throws std::invalid_argument if absent.
const FunctionHandle& corpus_function(const std::string& id);

/// A polynomial of degree n represented by its coefficients in the
/// Bernstein basis p_{n,0},...,p_{n,n}.
struct BernsteinForm {
    int degree = 0;
    std::vector<double> coeffs;  // size degree+1

    BernsteinForm() = default;
    BernsteinForm(int n, std::vector<double> c);
};

/// Strictly increasing points in [0,1] with first point 0 and last point 1.
struct GridSpec {
    std::vector<double> points;

    explicit GridSpec(std::vector<double> pts);
    static GridSpec uniform(int m);  // {i/m : i=0..m}
    int size() const { return static_cast<int>(points.size()); }
};

/// Bernstein basis polynomial p_{n,k}(x) = C(n,k) x^k (1-x)^{n-k},
/// computed in log space so that n up to 1e4 does not overflow.
/// Endpoints x in {0,1} are short-circuited to exact 0/1 values.
double bernstein_basis(int n, int k, double x);

/// log C(n,k) via lgamma.
double log_binomial(int n, int k);

/// The full weight vector (p_{n,k}(x))_{k=0..n}, computed by the ratio
/// recurrence outward from the modal index and normalized to sum exactly
/// to 1. More accurate than n+1 independent log-space evaluations.
std::vector<double> bernstein_weights(int n, double x);

/// Evaluates a Bernstein-form polynomial by the de Casteljau recurrence
/// (convex combinations only).
double eval_bernstein_form(const BernsteinForm& b, double x);

}  // namespace akr
