#include "akr/bounds.hpp"

#include "akr/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <tuple>

namespace akr {

namespace {

constexpr double kMarginTol = -1e-9;

// omega_1(f; delta) for many delta values at once: prefix-max over the
// per-lag sups of a uniform grid.
class Omega1Table {
  public:
    Omega1Table(const FunctionHandle& f, const GridSpec& grid) : m_(grid.size() - 1) {
        std::vector<double> v(grid.points.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = f.eval(grid.points[i]);
        table_.assign(m_ + 1, 0.0);
        for (int d = 1; d <= m_; ++d) {
            double best = 0.0;
            for (int i = 0; i + d <= m_; ++i)
                best = std::max(best, std::abs(v[i + d] - v[i]));
            table_[d] = std::max(best, table_[d - 1]);
        }
    }

    double at(double delta) const {
        if (delta <= 0.0) return 0.0;
        const int d = std::min(m_, static_cast<int>(std::floor(delta * m_ + 1e-9)));
        return table_[d];
    }

  private:
    int m_;
    std::vector<double> table_;
};

bool is_uniform(const GridSpec& grid) {
    const int m = grid.size() - 1;
    for (int i = 0; i <= m; ++i)
        if (std::abs(grid.points[i] - static_cast<double>(i) / m) > 1e-12) return false;
    return true;
}

double omega1_at(const FunctionHandle& f, double delta, const GridSpec& grid) {
    if (delta <= 0.0) return 0.0;
    return omega1(f, std::min(delta, 1.0), grid).value;
}

double omega2_at(const FunctionHandle& f, double delta, const GridSpec& grid) {
    // For delta > 1/2 the admissibility constraint x +- h in [0,1] caps the
    // step at 1/2, so omega_2(f; delta) == omega_2(f; 1/2).
    return omega2(f, std::min(delta, 0.5), grid).value;
}

}  // namespace

std::string to_string(BoundId id) {
    switch (id) {
        case BoundId::SHISHA_MOND_J2: return "SHISHA_MOND_J2";
        case BoundId::FINTA_2014: return "FINTA_2014";
        case BoundId::ALDAZ_RENDER_2018: return "ALDAZ_RENDER_2018";
        case BoundId::PROP_2_1: return "PROP_2_1";
        case BoundId::PROP_2_2_A: return "PROP_2_2_A";
        case BoundId::PROP_2_2_B: return "PROP_2_2_B";
        case BoundId::PROP_2_3: return "PROP_2_3";
    }
    return "?";
}

BoundId bound_from_string(const std::string& name) {
    for (BoundId id : {BoundId::SHISHA_MOND_J2, BoundId::FINTA_2014, BoundId::ALDAZ_RENDER_2018,
                       BoundId::PROP_2_1, BoundId::PROP_2_2_A, BoundId::PROP_2_2_B,
                       BoundId::PROP_2_3})
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown bound id '" + name + "'");
}

double sikkema_constant() {
    return (4306.0 + 837.0 * std::sqrt(6.0)) / 5832.0;
}

std::pair<double, std::vector<double>> lhs_error(const FunctionHandle& f, int n, int j,
                                                 const GridSpec& grid) {
    std::vector<double> pointwise(grid.points.size());
    double sup = 0.0;
    for (size_t i = 0; i < pointwise.size(); ++i) {
        pointwise[i] = std::abs(akr_error_at(f, n, j, grid.points[i]));
        sup = std::max(sup, pointwise[i]);
    }
    return {sup, std::move(pointwise)};
}

double rhs_shisha_mond_j2(const FunctionHandle& f, int n, double x, const GridSpec& grid,
                          std::optional<double> delta) {
    if (n < 2) throw std::invalid_argument("rhs_shisha_mond_j2: n must be >= 2");
    const double s = std::sqrt(2.0 * x * (1.0 - x) * (1.0 - std::pow(1.0 - x, n - 1)) / (n - 1));
    const double d = delta.value_or(s);
    if (d <= 0.0) return 0.0;  // endpoints under the balancing choice
    return omega1_at(f, d, grid) * (1.0 + s / d);
}

double rhs_finta_2014(const FunctionHandle& f, int n, int j, const GridSpec& grid, bool* vacuous) {
    if (j < 2 || n < j) throw std::invalid_argument("rhs_finta_2014: require n >= j >= 2");
    double arg = std::pow(2.0 * j * (3.0 + 4.0 * j) / std::sqrt(static_cast<double>(n)),
                          1.0 / (2.0 * j));
    bool clamped = false;
    if (arg > 1.0) { arg = 1.0; clamped = true; }
    if (vacuous) *vacuous = clamped;
    return 2.0 * omega1_at(f, arg, grid);
}

double rhs_aldaz_render_2018(const FunctionHandle& f, int n, const GridSpec& grid) {
    if (n < 1) throw std::invalid_argument("rhs_aldaz_render_2018: n must be >= 1");
    return (sikkema_constant() + 1.0) * omega1_at(f, 1.0 / std::sqrt(static_cast<double>(n)), grid);
}

double rhs_prop_2_1(const FunctionHandle& f, int n, int j, const GridSpec& grid) {
    if (j < 1 || n < j) throw std::invalid_argument("rhs_prop_2_1: require n >= j >= 1");
    const double w2 = omega2_at(f, 1.0 / std::sqrt(static_cast<double>(n)), grid);
    const double w1 = j == 1 ? 0.0 : omega1_at(f, static_cast<double>(j - 1) / n, grid);
    return w2 + w1;
}

double rhs_prop_2_2a(const FunctionHandle& f, int n, double x, const GridSpec& grid) {
    if (n < 5) throw std::invalid_argument("rhs_prop_2_2a: n must be >= 5 (Prop 2.2 a) scope)");
    const double h = 1.0 / std::sqrt(n - 1.0);
    const double d = d_n_profile(n, x);
    return h * d * omega1_at(f, h, grid) + (1.0 + x * d) * omega2_at(f, h, grid);
}

double rhs_prop_2_2b(const FunctionHandle& f, int n, int j, const GridSpec& grid) {
    if (n < 4) throw std::invalid_argument("rhs_prop_2_2b: n must be >= 4 (Prop 2.2 b) scope)");
    if (j < 1 || n < j) throw std::invalid_argument("rhs_prop_2_2b: require n >= j >= 1");
    const double h = 1.0 / std::sqrt(static_cast<double>(n));
    return (j - 1) * h * omega1_at(f, h, grid) + (0.125 + j) * omega2_at(f, h, grid);
}

double rhs_prop_2_3(const FunctionHandle& f, int n, int j, const GridSpec& grid) {
    if (j < 1 || n < j) throw std::invalid_argument("rhs_prop_2_3: require n >= j >= 1");
    const double delta2 = std::min(0.5, 1.0 / std::sqrt(static_cast<double>(n)));
    const double delta1 = static_cast<double>(j - 1) / n;
    return omega_inf_combined(f, j, delta2, delta1, grid).value;
}

bool bound_in_scope(BoundId id, int n, int j) {
    switch (id) {
        case BoundId::SHISHA_MOND_J2: return j == 2 && n >= 2;
        case BoundId::FINTA_2014: return j >= 2 && n >= j;
        case BoundId::ALDAZ_RENDER_2018: return n >= 1 && j >= 1 && n >= j;
        case BoundId::PROP_2_1: return j >= 1 && n >= j;
        case BoundId::PROP_2_2_A: return j == 2 && n >= 5;
        case BoundId::PROP_2_2_B: return j >= 1 && n >= j && n >= 4;
        case BoundId::PROP_2_3: return j >= 1 && n >= j;
    }
    return false;
}

BoundReport verify_bound(BoundId id, const FunctionHandle& f, int n, int j, const GridSpec& grid,
                         std::optional<double> delta) {
    if (!bound_in_scope(id, n, j))
        throw std::invalid_argument("verify_bound: (n=" + std::to_string(n) +
                                    ", j=" + std::to_string(j) + ") outside the scope of " +
                                    to_string(id));
    BoundReport rep;
    rep.bound_id = id;
    rep.f_id = f.id;
    rep.n = n;
    rep.j = j;

    auto [sup, pw] = lhs_error(f, n, j, grid);
    rep.max_lhs = sup;

    switch (id) {
        case BoundId::SHISHA_MOND_J2:
        case BoundId::PROP_2_2_A: {
            rep.pointwise = true;
            rep.min_margin = std::numeric_limits<double>::infinity();
            // omega_1 at many deltas is needed for the balancing choice;
            // precompute the lag table on uniform grids.
            std::optional<Omega1Table> table;
            if (id == BoundId::SHISHA_MOND_J2 && !delta && is_uniform(grid))
                table.emplace(f, grid);
            double w1 = 0.0, w2 = 0.0;
            if (id == BoundId::PROP_2_2_A) {
                const double h = 1.0 / std::sqrt(n - 1.0);
                w1 = omega1_at(f, h, grid);
                w2 = omega2_at(f, h, grid);
            }
            double fixed_delta_w1 = delta ? omega1_at(f, *delta, grid) : 0.0;
            for (size_t i = 0; i < grid.points.size(); ++i) {
                const double x = grid.points[i];
                double rhs;
                if (id == BoundId::PROP_2_2_A) {
                    const double d = d_n_profile(n, x);
                    rhs = d / std::sqrt(n - 1.0) * w1 + (1.0 + x * d) * w2;
                } else if (delta) {
                    const double s = std::sqrt(2.0 * x * (1.0 - x) *
                                               (1.0 - std::pow(1.0 - x, n - 1)) / (n - 1));
                    rhs = fixed_delta_w1 * (1.0 + s / *delta);
                } else {
                    const double s = std::sqrt(2.0 * x * (1.0 - x) *
                                               (1.0 - std::pow(1.0 - x, n - 1)) / (n - 1));
                    const double w = table ? table->at(s) : omega1_at(f, s, grid);
                    rhs = s > 0.0 ? w * 2.0 : 0.0;
                }
                const double margin = rhs - pw[i];
                if (margin < rep.min_margin) { rep.min_margin = margin; rep.witness_x = x; }
            }
            break;
        }
        case BoundId::FINTA_2014: {
            const double rhs = rhs_finta_2014(f, n, j, grid, &rep.vacuous);
            rep.min_margin = rhs - sup;
            break;
        }
        case BoundId::ALDAZ_RENDER_2018: {
            rep.informational = true;
            rep.min_margin = rhs_aldaz_render_2018(f, n, grid) - sup;
            break;
        }
        case BoundId::PROP_2_1:
            rep.min_margin = rhs_prop_2_1(f, n, j, grid) - sup;
            break;
        case BoundId::PROP_2_2_B:
            rep.min_margin = rhs_prop_2_2b(f, n, j, grid) - sup;
            break;
        case BoundId::PROP_2_3:
            rep.min_margin = rhs_prop_2_3(f, n, j, grid) - sup;
            break;
    }
    if (!rep.pointwise) {
        // witness of the sup error
        size_t best = 0;
        for (size_t i = 1; i < pw.size(); ++i)
            if (pw[i] > pw[best]) best = i;
        rep.witness_x = grid.points[best];
    }
    rep.holds = rep.informational || rep.min_margin >= kMarginTol;
    return rep;
}

void write_reports_csv(std::ostream& os, std::vector<BoundReport> reports) {
    std::sort(reports.begin(), reports.end(), [](const BoundReport& a, const BoundReport& b) {
        return std::tuple(to_string(a.bound_id), a.f_id, a.n, a.j) <
               std::tuple(to_string(b.bound_id), b.f_id, b.n, b.j);
    });
    os << "bound_id,f_id,n,j,max_lhs,min_margin,witness_x,holds\n";
    char buf[256];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%s,%s,%d,%d,%.15g,%.15g,%.15g,%d\n",
                      to_string(r.bound_id).c_str(), r.f_id.c_str(), r.n, r.j, r.max_lhs,
                      r.min_margin, r.witness_x, r.holds ? 1 : 0);
        os << buf;
    }
}

}  // namespace akr
