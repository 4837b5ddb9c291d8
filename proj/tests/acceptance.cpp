// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs the full sweeps at the pinned tolerances.

#include "akr/asymptotics.hpp"
#include "akr/bounds.hpp"
#include "akr/core.hpp"
#include "akr/iterates.hpp"
#include "akr/moduli.hpp"
#include "akr/operators.hpp"
#include "akr/parallel.hpp"

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace akr;

namespace {

int failures = 0;

void report(int num, const std::string& desc, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", num, desc.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// --- 1: reproduction of e_0 and e_j ---------------------------------------
void criterion_reproduction() {
    const GridSpec grid = GridSpec::uniform(500);
    double worst_e0 = 0.0, worst_ej = 0.0;
    for (int j = 1; j <= 4; ++j) {
        const FunctionHandle ej = monomial(j);
        const FunctionHandle e0 = monomial(0);
        for (int n = j; n <= 60; ++n) {
            const BernsteinForm b0 = apply_akr(e0, n, j);
            const BernsteinForm bj = apply_akr(ej, n, j);
            for (double x : grid.points) {
                worst_e0 = std::max(worst_e0, std::abs(eval_bernstein_form(b0, x) - 1.0));
                worst_ej = std::max(worst_ej,
                                    std::abs(eval_bernstein_form(bj, x) - std::pow(x, j)));
            }
        }
    }
    report(1, "reproduction of e_0 and e_j", worst_e0 <= 1e-12 && worst_ej <= 1e-10,
           "sup|B(e0)-1|=" + fmt(worst_e0) + ", sup|B(ej)-ej|=" + fmt(worst_ej));
}

// --- 2: node inequality -----------------------------------------------------
void criterion_node_inequality() {
    double worst = 0.0;
    for (int j = 1; j <= 6; ++j) {
        for (int n = j; n <= 500; ++n) {
            const AkrNodes nd = akr_nodes(n, j);
            for (int k = 0; k <= n; ++k) {
                const double gap = nd.nodes[k] - static_cast<double>(k) / n;
                worst = std::max(worst, gap);
                worst = std::max(worst, -(gap + static_cast<double>(j - 1) / n));
            }
        }
    }
    report(2, "node inequality -(j-1)/n <= t - k/n <= 0", worst <= 1e-14,
           "worst violation=" + fmt(worst));
}

// --- 3: moment bounds -------------------------------------------------------
void criterion_moment_bounds() {
    double worst = 0.0;
    for (int j = 1; j <= 6; ++j) {
        for (int n = j; n <= 500; ++n) {
            for (int i = 0; i <= 20; ++i) {
                const double x = i / 20.0;
                const double m1 = akr_first_moment(n, j, x);
                const double m2 = akr_second_moment(n, j, x);
                worst = std::max(worst, m1);                                     // m1 <= 0
                worst = std::max(worst, -m1 - static_cast<double>(j - 1) / n);   // |m1| <= (j-1)/n
                worst = std::max(worst, -m2);                                    // m2 >= 0
                worst = std::max(worst, m2 - (x * (1 - x) / n + 2 * x * (j - 1.0) / n));
                if (j == 2 && n >= 2)
                    worst = std::max(worst, std::abs(m1) - d_n_profile(n, x) / (n - 1));
            }
        }
    }
    report(3, "first/second moment bounds", worst <= 1e-12, "worst violation=" + fmt(worst));
}

// --- 4: bound domination ----------------------------------------------------
void criterion_bound_domination() {
    const GridSpec grid = GridSpec::uniform(1000);
    struct Cell { BoundId id; const FunctionHandle* f; int n; int j; };
    std::vector<Cell> cells;
    const std::vector<int> powers = {8, 16, 32, 64, 128, 256};
    for (BoundId id : {BoundId::PROP_2_1, BoundId::PROP_2_2_A, BoundId::PROP_2_2_B,
                       BoundId::PROP_2_3, BoundId::FINTA_2014, BoundId::ALDAZ_RENDER_2018}) {
        for (int j = 1; j <= 4; ++j) {
            // paper minimum for this bound/j, then powers of two above it
            int nmin = j;
            if (id == BoundId::PROP_2_2_A) nmin = 5;
            if (id == BoundId::PROP_2_2_B) nmin = std::max(4, j);
            std::set<int> ns = {nmin};
            for (int n : powers)
                if (n >= nmin) ns.insert(n);
            for (int n : ns)
                if (bound_in_scope(id, n, j))
                    for (const auto& f : builtin_corpus()) cells.push_back({id, &f, n, j});
        }
    }
    std::vector<BoundReport> reports(cells.size());
    parallel_for(cells.size(), default_threads(), [&](size_t i) {
        reports[i] = verify_bound(cells[i].id, *cells[i].f, cells[i].n, cells[i].j, grid);
    });
    bool ok = true;
    std::string bad;
    int asserted = 0;
    for (const auto& r : reports) {
        if (r.informational || (r.bound_id == BoundId::FINTA_2014 && r.vacuous)) continue;
        ++asserted;
        if (!r.holds) {
            ok = false;
            if (bad.size() < 120)
                bad += " " + to_string(r.bound_id) + "/" + r.f_id + "/n=" +
                       std::to_string(r.n) + "/j=" + std::to_string(r.j) +
                       " margin=" + fmt(r.min_margin);
        }
    }
    report(4, "bound domination over the corpus sweep", ok,
           ok ? std::to_string(asserted) + " asserted reports hold (of " +
                    std::to_string(reports.size()) + " total)"
              : bad);
}

// --- 5: O(1/n) rate for C2 functions ----------------------------------------
void criterion_c2_rate() {
    const GridSpec grid = GridSpec::uniform(500);
    bool ok = true;
    std::string bad;
    for (const auto& f : builtin_corpus()) {
        if (f.smoothness != Smoothness::C2 && f.smoothness != Smoothness::Analytic) continue;
        for (int j = 1; j <= 3; ++j) {
            std::vector<double> scaled;
            for (int n : {32, 64, 128, 256}) {
                double sup = 0.0;
                for (double x : grid.points)
                    sup = std::max(sup, std::abs(akr_error_at(f, n, j, x)));
                scaled.push_back(n * sup);
            }
            const double mx = *std::max_element(scaled.begin(), scaled.end());
            const double mn = *std::min_element(scaled.begin(), scaled.end());
            if (mx < 1e-8) continue;  // exactly reproduced
            if (mx > 4.0 * mn) {
                ok = false;
                bad += " " + f.id + "/j=" + std::to_string(j) + " ratio=" + fmt(mx / mn);
            }
        }
    }
    report(5, "n*sup-error bounded (max/min <= 4) for C2 corpus", ok, bad);
}

// --- 6: iterates contraction ------------------------------------------------
void criterion_iterates() {
    const GridSpec grid = GridSpec::uniform(500);
    bool ok = true;
    std::string bad;

    struct Case { const char* f_id; int n; int j; int m_max; };
    for (const Case c : {Case{"e1", 6, 2, 200}, {"exp", 4, 2, 120}, {"hat", 8, 3, 200}}) {
        const FunctionHandle& f = corpus_function(c.f_id);
        const FunctionHandle lim = iterate_limit(f, c.j);
        const IterationMatrix mat = build_iteration_matrix(c.n, c.j);
        const AkrNodes nd = akr_nodes(c.n, c.j);
        std::vector<double> v(c.n + 1), next(c.n + 1);
        for (int k = 0; k <= c.n; ++k) v[k] = f.eval(nd.nodes[k]);
        const double factor = 1.0 - std::pow(2.0, 1.0 - c.n);
        double prev = -1.0;
        double final_d = 0.0;
        for (int m = 1; m <= c.m_max; ++m) {
            if (m > 1) {
                for (int i = 0; i <= c.n; ++i) {
                    double s = 0.0;
                    for (int k = 0; k <= c.n; ++k) s += mat.rows[i][k] * v[k];
                    next[i] = s;
                }
                v.swap(next);
            }
            const BernsteinForm form(c.n, v);
            double d = 0.0;
            for (double x : grid.points)
                d = std::max(d, std::abs(eval_bernstein_form(form, x) - lim.eval(x)));
            if (prev > 1e-13 && d > factor * prev + 1e-9) {
                ok = false;
                bad += " " + std::string(c.f_id) + " m=" + std::to_string(m) +
                       " ratio=" + fmt(d / prev);
            }
            prev = d;
            final_d = d;
        }
        if (std::string(c.f_id) == "e1" && final_d > 1e-8) {
            ok = false;
            bad += " e1 final=" + fmt(final_d);
        }
    }
    report(6, "iterates contract geometrically and reach the fixed point", ok, bad);
}

// --- 7: Voronovskaya --------------------------------------------------------
void criterion_voronovskaya() {
    const std::vector<int> ns = {256, 512, 1024, 2048, 4096};
    bool ok = true;
    std::string bad;
    for (const auto& f : builtin_corpus()) {
        if (!f.has_d1() || !f.has_d2()) continue;
        for (int j = 1; j <= 3; ++j) {
            for (double x : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const VoronovskayaTrace tr = voronovskaya_trace(f, j, x, ns);
                const double tol = std::max(0.02 * std::abs(tr.target), 0.005);
                if (std::abs(tr.extrapolated - tr.target) > tol) {
                    ok = false;
                    if (bad.size() < 150)
                        bad += " " + f.id + "/j=" + std::to_string(j) + "/x=" + fmt(x) +
                               " extrap=" + fmt(tr.extrapolated) + " target=" + fmt(tr.target);
                }
            }
        }
    }
    // exact classical identity for j = 1, f = e_2
    double worst = 0.0;
    for (int n : {2, 8, 64, 256, 512, 1024, 2048, 4096})
        for (double x : {0.1, 0.3, 0.5, 0.7, 0.9})
            worst = std::max(worst,
                             std::abs(n * akr_error_at(monomial(2), n, 1, x) - x * (1 - x)));
    if (worst > 1e-12) {
        ok = false;
        bad += " classical identity worst=" + fmt(worst);
    }
    report(7, "Voronovskaya extrapolation matches the target", ok, bad);
}

// --- 8: pre-Voronovskaya ----------------------------------------------------
void criterion_pre_voronovskaya() {
    bool ok = true;
    std::string bad;

    std::vector<FunctionHandle> quads = {monomial(0), monomial(1), monomial(2)};
    FunctionHandle mixed;
    mixed.id = "mixedquad";
    mixed.eval = [](double x) { return 0.7 - 1.3 * x + 2.1 * x * x; };
    mixed.d1 = [](double x) { return -1.3 + 4.2 * x; };
    mixed.d2 = [](double) { return 4.2; };
    quads.push_back(mixed);
    for (const auto& f : quads)
        for (int j : {1, 2, 3})
            for (int n : {4, 16, 64, 256, 1024})
                for (double x : {0.1, 0.5, 0.9}) {
                    if (n < j) continue;
                    const double r = pre_voronovskaya_residual(f, n, j, x);
                    if (r > 1e-9 * n) {
                        ok = false;
                        bad += " quad residual " + f.id + " n=" + std::to_string(n) +
                               " r=" + fmt(r);
                    }
                }

    // empirical constant stability for exp: the sweep constant must settle
    // as the doubling n list is extended (the per-n ratio itself decays,
    // so the sweep maximum is the stable quantity)
    const GridSpec mod_grid = GridSpec::uniform(2000);
    const std::vector<double> xs = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    for (int j : {1, 2}) {
        std::vector<double> cs;
        std::vector<int> ns;
        for (int n : {256, 512, 1024, 2048}) {
            ns.push_back(n);
            const double c = estimate_finta_constant({corpus_function("exp")}, j, ns, xs,
                                                     mod_grid);
            if (!std::isfinite(c) || c <= 0.0) {
                ok = false;
                bad += " nonfinite C at n=" + std::to_string(n);
            }
            cs.push_back(c);
        }
        for (size_t i = 0; i + 1 < cs.size(); ++i) {
            const double ratio = cs[i + 1] / cs[i];
            if (std::abs(ratio - 1.0) > 0.2) {
                ok = false;
                bad += " j=" + std::to_string(j) + " C-ratio=" + fmt(ratio);
            }
        }
    }
    report(8, "pre-Voronovskaya residual: zero on quadratics, stable constant for exp", ok, bad);
}

// --- 9: figure 1 ------------------------------------------------------------
void criterion_figure1() {
    const GridSpec grid = GridSpec::uniform(500);
    double best = -1.0, best_x = 0.0;
    for (double x : grid.points) {
        const double d = d_n_profile(5, x);
        if (d > best) { best = d; best_x = x; }
    }
    const bool vanish = d_n_profile(5, 0.0) == 0.0 && d_n_profile(5, 1.0) == 0.0 &&
                        d_n_profile(10, 0.0) == 0.0 && d_n_profile(10, 1.0) == 0.0;
    const bool ok = std::abs(best - 0.53499) <= 1e-3 && std::abs(best_x - 0.33127) <= 1e-3 &&
                    vanish;
    report(9, "d_5 profile peak location and endpoints", ok,
           "max=" + fmt(best) + " at x=" + fmt(best_x));
}

// --- 10: oracle equivalence -------------------------------------------------
void criterion_oracle_equivalence() {
    std::mt19937 rng(20260823);
    const auto& corpus = builtin_corpus();
    bool ok = true;
    std::string bad;
    for (int rep = 0; rep < 10; ++rep) {
        const FunctionHandle& f = corpus[rng() % corpus.size()];
        const int n = 5 + static_cast<int>(rng() % 76);
        const int j = 1 + static_cast<int>(rng() % std::min(4, n));
        const int num = 1 + static_cast<int>(rng() % 99);
        const double x = num / 100.0;

        const BernsteinForm b = apply_akr(f, n, j);
        const double de_casteljau = eval_bernstein_form(b, x);

        double log_space = 0.0;  // direct summation with the log-space basis
        for (int k = 0; k <= n; ++k) log_space += b.coeffs[k] * bernstein_basis(n, k, x);

        oracles::BigFloat hp = 0;  // exact-rational basis, high-precision nodes
        const oracles::BigRat xr(num, 100);
        for (int k = 0; k <= n; ++k) {
            const double node = static_cast<double>(oracles::akr_node_hp(n, j, k));
            hp += oracles::BigFloat(f.eval(node)) *
                  oracles::BigFloat(oracles::bernstein_exact(n, k, xr));
        }
        const double exact = static_cast<double>(hp);

        const double scale = std::max({std::abs(exact), std::abs(de_casteljau), 1e-30});
        if (std::abs(de_casteljau - log_space) > 1e-10 * scale ||
            std::abs(de_casteljau - exact) > 1e-10 * scale) {
            ok = false;
            bad += " (" + f.id + ",n=" + std::to_string(n) + ",j=" + std::to_string(j) +
                   ",x=" + fmt(x) + ")";
        }
    }
    report(10, "de Casteljau / log-space / big-rational routes agree", ok, bad);
}

}  // namespace

int main() {
    criterion_reproduction();
    criterion_node_inequality();
    criterion_moment_bounds();
    criterion_bound_domination();
    criterion_c2_rate();
    criterion_iterates();
    criterion_voronovskaya();
    criterion_pre_voronovskaya();
    criterion_figure1();
    criterion_oracle_equivalence();
    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
