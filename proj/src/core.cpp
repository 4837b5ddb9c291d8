#include "akr/core.hpp"

#include <algorithm>
#include <cmath>

namespace akr {

std::string to_string(Smoothness s) {
    switch (s) {
        case Smoothness::C0: return "C0";
        case Smoothness::C1: return "C1";
        case Smoothness::C2: return "C2";
        case Smoothness::Analytic: return "Analytic";
    }
    return "?";
}

void validate_derivatives(const FunctionHandle& f) {
    const double h = 1e-5;
    const double rel_tol = 1e-6;
    for (int i = 1; i < 20; ++i) {
        const double x = i / 20.0;
        if (x - h <= 0.0 || x + h >= 1.0) continue;
        if (f.has_d1()) {
            const double fd = (f.eval(x + h) - f.eval(x - h)) / (2 * h);
            const double d = f.d1(x);
            if (std::abs(fd - d) > rel_tol * std::max(1.0, std::abs(d)))
                throw std::invalid_argument("FunctionHandle '" + f.id +
                                            "': d1 disagrees with finite differences at x=" +
                                            std::to_string(x));
        }
        if (f.has_d2()) {
            if (!f.has_d1())
                throw std::invalid_argument("FunctionHandle '" + f.id + "': d2 without d1");
            const double fd = (f.d1(x + h) - f.d1(x - h)) / (2 * h);
            const double d = f.d2(x);
            if (std::abs(fd - d) > rel_tol * std::max(1.0, std::abs(d)))
                throw std::invalid_argument("FunctionHandle '" + f.id +
                                            "': d2 disagrees with finite differences at x=" +
                                            std::to_string(x));
        }
    }
}

FunctionHandle monomial(int j) {
    if (j < 0) throw std::invalid_argument("monomial: j must be >= 0");
    FunctionHandle f;
    f.id = "e" + std::to_string(j);
    f.smoothness = Smoothness::Analytic;
    f.eval = [j](double x) { return std::pow(x, j); };
    f.d1 = [j](double x) { return j == 0 ? 0.0 : j * std::pow(x, j - 1); };
    f.d2 = [j](double x) { return j < 2 ? 0.0 : j * (j - 1) * std::pow(x, j - 2); };
    return f;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<FunctionHandle> make_corpus() {
    std::vector<FunctionHandle> corpus;
    for (int j = 0; j <= 4; ++j) corpus.push_back(monomial(j));

    FunctionHandle fexp;
    fexp.id = "exp";
    fexp.smoothness = Smoothness::Analytic;
    fexp.eval = [](double x) { return std::exp(x); };
    fexp.d1 = fexp.eval;
    fexp.d2 = fexp.eval;
    corpus.push_back(fexp);

    FunctionHandle fsin;
    fsin.id = "sinpi";
    fsin.smoothness = Smoothness::Analytic;
    fsin.eval = [](double x) { return std::sin(kPi * x); };
    fsin.d1 = [](double x) { return kPi * std::cos(kPi * x); };
    fsin.d2 = [](double x) { return -kPi * kPi * std::sin(kPi * x); };
    corpus.push_back(fsin);

    FunctionHandle frunge;
    frunge.id = "runge";
    frunge.smoothness = Smoothness::Analytic;
    frunge.eval = [](double x) {
        const double u = x - 0.5;
        return 1.0 / (1.0 + 25.0 * u * u);
    };
    frunge.d1 = [](double x) {
        const double u = x - 0.5;
        const double g = 1.0 + 25.0 * u * u;
        return -50.0 * u / (g * g);
    };
    frunge.d2 = [](double x) {
        const double u = x - 0.5;
        const double g = 1.0 + 25.0 * u * u;
        return (3750.0 * u * u - 50.0) / (g * g * g);
    };
    corpus.push_back(frunge);

    FunctionHandle fabs_;
    fabs_.id = "abshalf";
    fabs_.smoothness = Smoothness::C0;  // no derivative at 1/2
    fabs_.eval = [](double x) { return std::abs(x - 0.5); };
    corpus.push_back(fabs_);

    FunctionHandle fpow32;
    fpow32.id = "x32";
    fpow32.smoothness = Smoothness::C1;  // d2 blows up at 0
    fpow32.eval = [](double x) { return x * std::sqrt(x); };
    fpow32.d1 = [](double x) { return 1.5 * std::sqrt(x); };
    corpus.push_back(fpow32);

    FunctionHandle fhat;
    fhat.id = "hat";
    fhat.smoothness = Smoothness::C0;
    fhat.eval = [](double x) { return 1.0 - 2.0 * std::abs(x - 0.5); };
    corpus.push_back(fhat);

    for (const auto& f : corpus) validate_derivatives(f);
    return corpus;
}

}  // namespace

const std::vector<FunctionHandle>& builtin_corpus() {
    static const std::vector<FunctionHandle> corpus = make_corpus();
    return corpus;
}

const FunctionHandle& corpus_function(const std::string& id) {
    for (const auto& f : builtin_corpus())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown corpus function '" + id + "'");
}

BernsteinForm::BernsteinForm(int n, std::vector<double> c) : degree(n), coeffs(std::move(c)) {
    if (n < 0) throw std::invalid_argument("BernsteinForm: negative degree");
    if (coeffs.size() != static_cast<size_t>(n) + 1)
        throw std::invalid_argument("BernsteinForm: need degree+1 coefficients");
}

GridSpec::GridSpec(std::vector<double> pts) : points(std::move(pts)) {
    if (points.size() < 2 || points.front() != 0.0 || points.back() != 1.0)
        throw std::invalid_argument("GridSpec: points must start at 0 and end at 1");
    for (size_t i = 1; i < points.size(); ++i)
        if (!(points[i] > points[i - 1]))
            throw std::invalid_argument("GridSpec: points must be strictly increasing");
}

GridSpec GridSpec::uniform(int m) {
    if (m < 1) throw std::invalid_argument("GridSpec::uniform: m must be >= 1");
    std::vector<double> pts(m + 1);
    for (int i = 0; i <= m; ++i) pts[i] = static_cast<double>(i) / m;
    pts.back() = 1.0;
    return GridSpec(std::move(pts));
}

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double bernstein_basis(int n, int k, double x) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("bernstein_basis: need 0 <= k <= n");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("bernstein_basis: need x in [0,1]");
    if (x == 0.0) return k == 0 ? 1.0 : 0.0;
    if (x == 1.0) return k == n ? 1.0 : 0.0;
    const double l = log_binomial(n, k) + k * std::log(x) + (n - k) * std::log1p(-x);
    return std::exp(l);
}

std::vector<double> bernstein_weights(int n, double x) {
    if (n < 0) throw std::invalid_argument("bernstein_weights: n must be >= 0");
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("bernstein_weights: need x in [0,1]");
    std::vector<double> w(n + 1, 0.0);
    if (x == 0.0) { w[0] = 1.0; return w; }
    if (x == 1.0) { w[n] = 1.0; return w; }
    // Ratios are <= 1 moving away from the mode, so no overflow and the
    // tails underflow harmlessly to 0. Extended precision keeps the
    // recurrence and the normalization below one double ulp per weight.
    std::vector<long double> lw(n + 1, 0.0L);
    const int k0 = std::min(n, static_cast<int>(std::floor((n + 1) * x)));
    const long double r = static_cast<long double>(x) / (1.0L - x);
    lw[k0] = 1.0L;
    for (int k = k0; k < n; ++k) {
        lw[k + 1] = lw[k] * r * (n - k) / (k + 1);
        if (lw[k + 1] < 1e-300L) { lw[k + 1] = 0.0L; break; }
    }
    for (int k = k0; k > 0; --k) {
        lw[k - 1] = lw[k] / r * k / (n - k + 1);
        if (lw[k - 1] < 1e-300L) { lw[k - 1] = 0.0L; break; }
    }
    long double sum = 0.0L;
    for (long double v : lw) sum += v;
    for (int k = 0; k <= n; ++k) w[k] = static_cast<double>(lw[k] / sum);
    return w;
}

double eval_bernstein_form(const BernsteinForm& b, double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("eval_bernstein_form: need x in [0,1]");
    std::vector<double> c = b.coeffs;
    for (int level = b.degree; level >= 1; --level)
        for (int i = 0; i < level; ++i) c[i] = (1.0 - x) * c[i] + x * c[i + 1];
    return c[0];
}

}  // namespace akr
