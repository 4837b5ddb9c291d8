#pragma once

#include "akr/core.hpp"
#include "akr/moduli.hpp"

#include <iosfwd>
#include <optional>

namespace akr {

enum class BoundId {
    SHISHA_MOND_J2,
    FINTA_2014,
    ALDAZ_RENDER_2018,
    PROP_2_1,
    PROP_2_2_A,
    PROP_2_2_B,
    PROP_2_3,
};

std::string to_string(BoundId id);
BoundId bound_from_string(const std::string& name);

/// Sikkema's constant (4306 + 837 sqrt(6)) / 5832.
double sikkema_constant();

/// Result of sweeping one inequality over one function.
struct BoundReport {
    BoundId bound_id{};
    std::string f_id;
    int n = 0;
    int j = 0;
    bool pointwise = false;
    double max_lhs = 0.0;
    double min_margin = 0.0;  // min over x of RHS - LHS
    double witness_x = 0.0;
    bool holds = false;          // min_margin >= -1e-9 (always true when informational)
    bool informational = false;  // never asserted (large-n-only bound)
    bool vacuous = false;        // modulus argument clamped to 1
};

/// |f(x) - B_{n,0,j}(f; x)| per grid point and its sup.
std::pair<double, std::vector<double>> lhs_error(const FunctionHandle& f, int n, int j,
                                                 const GridSpec& grid);

/// Pointwise omega_1 estimate for j=2:
/// omega_1(f; delta) (1 + sqrt(2x(1-x)(1-(1-x)^{n-1})/(n-1)) / delta).
/// With no delta given, the balancing choice delta = sqrt(...) is used.
double rhs_shisha_mond_j2(const FunctionHandle& f, int n, double x, const GridSpec& grid,
                          std::optional<double> delta = std::nullopt);

/// Uniform estimate 2 omega_1(f; (2j(3+4j)/sqrt(n))^{1/(2j)}). If the inner
/// argument exceeds 1 it is clamped and *vacuous is set.
double rhs_finta_2014(const FunctionHandle& f, int n, int j, const GridSpec& grid,
                      bool* vacuous = nullptr);

/// (c_S + 1) omega_1(f; n^{-1/2}); valid only for n large, reported
/// informationally.
double rhs_aldaz_render_2018(const FunctionHandle& f, int n, const GridSpec& grid);

/// omega_2(f; 1/sqrt(n)) + omega_1(f; (j-1)/n).
double rhs_prop_2_1(const FunctionHandle& f, int n, int j, const GridSpec& grid);

/// Pointwise j=2 estimate with d_n(x) = (1-x)(1-(1-x)^{n-1}), n >= 5:
/// d_n(x)/sqrt(n-1) omega_1(f; 1/sqrt(n-1)) + (1 + x d_n(x)) omega_2(f; 1/sqrt(n-1)).
double rhs_prop_2_2a(const FunctionHandle& f, int n, double x, const GridSpec& grid);

/// Uniform estimate (j-1)/sqrt(n) omega_1(f; 1/sqrt(n)) + (1/8 + j) omega_2(f; 1/sqrt(n)),
/// n >= 4.
double rhs_prop_2_2b(const FunctionHandle& f, int n, int j, const GridSpec& grid);

/// inf over a of [omega_2(f - a e_j; 1/sqrt(n)) + omega_1(f - a e_j; (j-1)/n)];
/// always <= rhs_prop_2_1.
double rhs_prop_2_3(const FunctionHandle& f, int n, int j, const GridSpec& grid);

/// True when (bound_id, n, j) lies inside the bound's stated scope.
bool bound_in_scope(BoundId id, int n, int j);

/// Sweeps one inequality over one function: LHS, RHS, margins, witness.
/// Throws std::invalid_argument when (n, j) is outside the bound's scope.
BoundReport verify_bound(BoundId id, const FunctionHandle& f, int n, int j, const GridSpec& grid,
                         std::optional<double> delta = std::nullopt);

/// Writes reports as CSV (header + one row per report, 15 significant
/// digits, sorted by key).
void write_reports_csv(std::ostream& os, std::vector<BoundReport> reports);

}  // namespace akr
