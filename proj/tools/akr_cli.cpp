// Command-line front end for the AKR Bernstein-type operator library:
// node tables, operator evaluation, moment profiles, inequality sweeps,
// iterate trajectories, Voronovskaya traces and the d_n profile curves.

#include "akr/asymptotics.hpp"
#include "akr/bounds.hpp"
#include "akr/core.hpp"
#include "akr/iterates.hpp"
#include "akr/moduli.hpp"
#include "akr/operators.hpp"
#include "akr/parallel.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using akr::BoundId;
using akr::BoundReport;
using akr::FunctionHandle;
using akr::GridSpec;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

int default_grid_size() {
    if (const char* env = std::getenv("AKR_DEFAULT_GRID")) {
        const int m = std::atoi(env);
        if (m >= 10) return m;
        std::cerr << "warning: ignoring AKR_DEFAULT_GRID=" << env << " (need >= 10)\n";
    }
    return 2000;
}

// Writes to --out when given, stdout otherwise. Returns false if the path
// cannot be opened.
class Output {
  public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            ok_ = file_.good();
        }
    }
    bool ok() const { return ok_; }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
    bool ok_ = true;
};

struct BoundsConfig {
    std::vector<std::string> f_ids;
    std::vector<int> n_list;
    std::vector<int> j_list;
    std::vector<std::string> bound_names;
    int grid = 0;
    double delta = 0.0;  // 0 = balancing default
    std::string out;
};

void load_config(const std::string& path, BoundsConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.contains("functions")) cfg.f_ids = doc["functions"].get<std::vector<std::string>>();
    if (doc.contains("n_list")) cfg.n_list = doc["n_list"].get<std::vector<int>>();
    if (doc.contains("j_list")) cfg.j_list = doc["j_list"].get<std::vector<int>>();
    if (doc.contains("bounds")) cfg.bound_names = doc["bounds"].get<std::vector<std::string>>();
    if (doc.contains("grid")) cfg.grid = doc["grid"].get<int>();
    if (doc.contains("delta")) cfg.delta = doc["delta"].get<double>();
    if (doc.contains("out")) cfg.out = doc["out"].get<std::string>();
}

int cmd_nodes(int n, int j, const std::string& out) {
    const akr::AkrNodes nodes = akr::akr_nodes(n, j);
    Output o(out);
    if (!o.ok()) { std::cerr << "cannot open output path '" << out << "'\n"; return 1; }
    o.stream() << "k,t\n";
    for (int k = 0; k <= n; ++k)
        o.stream() << k << "," << fmt(nodes.nodes[k]) << "\n";
    return 0;
}

int cmd_eval(const std::string& f_id, int n, int j, const std::vector<double>& xs,
             const std::string& out) {
    const FunctionHandle& f = akr::corpus_function(f_id);
    const akr::BernsteinForm akr_form = akr::apply_akr(f, n, j);
    const akr::BernsteinForm cls_form = akr::apply_bernstein(f, n);
    const akr::TauSpec tau([j](double x) { return std::pow(x, j); },
                           [j](double x) { return std::pow(x, 1.0 / j); });
    Output o(out);
    if (!o.ok()) { std::cerr << "cannot open output path '" << out << "'\n"; return 1; }
    o.stream() << "x,f,akr,bernstein,king,tau\n";
    for (double x : xs) {
        o.stream() << fmt(x) << "," << fmt(f.eval(x)) << ","
                   << fmt(akr::eval_bernstein_form(akr_form, x)) << ","
                   << fmt(akr::eval_bernstein_form(cls_form, x)) << ","
                   << fmt(akr::apply_king(f, n, x)) << "," << fmt(akr::apply_tau(f, tau, n, x))
                   << "\n";
    }
    return 0;
}

int cmd_moments(int n, int j, int grid_m, const std::string& out) {
    const GridSpec grid = GridSpec::uniform(grid_m);
    Output o(out);
    if (!o.ok()) { std::cerr << "cannot open output path '" << out << "'\n"; return 1; }
    o.stream() << "x,first_moment,second_moment\n";
    for (double x : grid.points)
        o.stream() << fmt(x) << "," << fmt(akr::akr_first_moment(n, j, x)) << ","
                   << fmt(akr::akr_second_moment(n, j, x)) << "\n";
    return 0;
}

int cmd_bounds(const BoundsConfig& cfg, unsigned threads) {
    std::vector<BoundId> bounds;
    for (const auto& name : cfg.bound_names) bounds.push_back(akr::bound_from_string(name));
    const GridSpec grid = GridSpec::uniform(cfg.grid);
    const std::optional<double> delta =
        cfg.delta > 0.0 ? std::optional<double>(cfg.delta) : std::nullopt;

    struct Cell { BoundId id; const FunctionHandle* f; int n; int j; };
    std::vector<Cell> cells;
    for (BoundId id : bounds)
        for (const auto& f_id : cfg.f_ids) {
            const FunctionHandle& f = akr::corpus_function(f_id);
            for (int n : cfg.n_list)
                for (int j : cfg.j_list)
                    if (akr::bound_in_scope(id, n, j)) cells.push_back({id, &f, n, j});
        }
    std::vector<BoundReport> reports(cells.size());
    akr::parallel_for(cells.size(), threads, [&](size_t i) {
        const Cell& c = cells[i];
        reports[i] = akr::verify_bound(c.id, *c.f, c.n, c.j, grid,
                                       c.id == BoundId::SHISHA_MOND_J2 ? delta : std::nullopt);
    });
    bool all_hold = true;
    for (const auto& r : reports)
        if (!r.informational && !r.holds) all_hold = false;
    Output o(cfg.out);
    if (!o.ok()) { std::cerr << "cannot open output path '" << cfg.out << "'\n"; return 1; }
    akr::write_reports_csv(o.stream(), reports);
    return all_hold ? 0 : 1;
}

int cmd_iterates(const std::string& f_id, int n, int j, int m_max, const std::string& out) {
    const FunctionHandle& f = akr::corpus_function(f_id);
    const FunctionHandle limit = akr::iterate_limit(f, j);
    const akr::IterationMatrix mat = akr::build_iteration_matrix(n, j);
    const akr::AkrNodes nodes = akr::akr_nodes(n, j);
    const GridSpec grid = GridSpec::uniform(500);
    std::vector<double> v(n + 1), next(n + 1);
    for (int k = 0; k <= n; ++k) v[k] = f.eval(nodes.nodes[k]);
    Output o(out);
    if (!o.ok()) { std::cerr << "cannot open output path '" << out << "'\n"; return 1; }
    o.stream() << "m,sup_distance_to_limit\n";
    for (int m = 1; m <= m_max; ++m) {
        if (m > 1) {
            for (int i = 0; i <= n; ++i) {
                double s = 0.0;
                for (int k = 0; k <= n; ++k) s += mat.rows[i][k] * v[k];
                next[i] = s;
            }
            v.swap(next);
        }
        const akr::BernsteinForm form(n, v);
        double sup = 0.0;
        for (double x : grid.points)
            sup = std::max(sup, std::abs(akr::eval_bernstein_form(form, x) - limit.eval(x)));
        o.stream() << m << "," << fmt(sup) << "\n";
        if (sup < 1e-13) break;  // early stop: converged to the fixed point
    }
    return 0;
}

int cmd_voronovskaya(const std::string& f_id, int j, const std::vector<double>& xs,
                     std::vector<int> n_list, const std::string& out) {
    const FunctionHandle& f = akr::corpus_function(f_id);
    if (n_list.empty()) n_list = {256, 512, 1024, 2048, 4096};
    Output o(out);
    if (!o.ok()) { std::cerr << "cannot open output path '" << out << "'\n"; return 1; }
    o.stream() << "f_id,j,x,n,scaled_error,target,extrapolated\n";
    for (double x : xs) {
        const akr::VoronovskayaTrace tr = akr::voronovskaya_trace(f, j, x, n_list);
        for (size_t i = 0; i < tr.n_list.size(); ++i)
            o.stream() << tr.f_id << "," << j << "," << fmt(x) << "," << tr.n_list[i] << ","
                       << fmt(tr.scaled_errors[i]) << "," << fmt(tr.target) << ","
                       << fmt(tr.extrapolated) << "\n";
    }
    return 0;
}

int cmd_figure1(const std::string& out) {
    const GridSpec grid = GridSpec::uniform(500);
    Output o(out);
    if (!o.ok()) { std::cerr << "cannot open output path '" << out << "'\n"; return 1; }
    o.stream() << "x,d5,d10\n";
    for (double x : grid.points)
        o.stream() << fmt(x) << "," << fmt(akr::d_n_profile(5, x)) << ","
                   << fmt(akr::d_n_profile(10, x)) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-type operator toolbox (AKR operator, moduli, bounds, iterates)"};
    app.require_subcommand(1);

    int n = 10, j = 2, m_max = 100;
    int grid_m = default_grid_size();
    unsigned threads = akr::default_threads();
    std::string f_id = "e2", out_path, config_path;
    std::vector<double> xs;
    std::vector<int> n_list;

    auto* sc_nodes = app.add_subcommand("nodes", "emit the node vector t_{n,k}");
    sc_nodes->add_option("--n", n)->required();
    sc_nodes->add_option("--j", j)->required();
    sc_nodes->add_option("--out", out_path);

    auto* sc_eval = app.add_subcommand("eval", "evaluate AKR/classical/King/tau side by side");
    sc_eval->add_option("--f", f_id);
    sc_eval->add_option("--n", n)->required();
    sc_eval->add_option("--j", j)->required();
    sc_eval->add_option("--x", xs)->required();
    sc_eval->add_option("--out", out_path);

    auto* sc_moments = app.add_subcommand("moments", "first and second moments over a grid");
    sc_moments->add_option("--n", n)->required();
    sc_moments->add_option("--j", j)->required();
    sc_moments->add_option("--grid", grid_m);
    sc_moments->add_option("--out", out_path);

    BoundsConfig bcfg;
    double delta_flag = 0.0;
    auto* sc_bounds = app.add_subcommand("bounds", "sweep direct estimates over the corpus");
    sc_bounds->add_option("--config", config_path, "JSON sweep description");
    sc_bounds->add_option("--f", bcfg.f_ids);
    sc_bounds->add_option("--n", bcfg.n_list);
    sc_bounds->add_option("--j", bcfg.j_list);
    sc_bounds->add_option("--bound", bcfg.bound_names);
    sc_bounds->add_option("--grid", grid_m);
    sc_bounds->add_option("--delta", delta_flag, "fixed delta for SHISHA_MOND_J2");
    sc_bounds->add_option("--threads", threads);
    sc_bounds->add_option("--out", out_path);

    auto* sc_iter = app.add_subcommand("iterates", "sup distance of B^m f to its limit");
    sc_iter->add_option("--f", f_id)->required();
    sc_iter->add_option("--n", n)->required();
    sc_iter->add_option("--j", j)->required();
    sc_iter->add_option("--m", m_max)->required();
    sc_iter->add_option("--out", out_path);

    auto* sc_vor = app.add_subcommand("voronovskaya", "scaled errors vs the asymptotic target");
    sc_vor->add_option("--f", f_id)->required();
    sc_vor->add_option("--j", j)->required();
    sc_vor->add_option("--x", xs)->required();
    sc_vor->add_option("--n", n_list, "increasing n list (default doubling 256..4096)");
    sc_vor->add_option("--out", out_path);

    auto* sc_fig = app.add_subcommand("figure1", "d_n(x) profile curves for n=5 and n=10");
    sc_fig->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sc_nodes->parsed()) return cmd_nodes(n, j, out_path);
        if (sc_eval->parsed()) return cmd_eval(f_id, n, j, xs, out_path);
        if (sc_moments->parsed()) return cmd_moments(n, j, grid_m, out_path);
        if (sc_bounds->parsed()) {
            if (!config_path.empty()) {
                BoundsConfig file_cfg;
                load_config(config_path, file_cfg);
                // flags override the file
                if (bcfg.f_ids.empty()) bcfg.f_ids = file_cfg.f_ids;
                if (bcfg.n_list.empty()) bcfg.n_list = file_cfg.n_list;
                if (bcfg.j_list.empty()) bcfg.j_list = file_cfg.j_list;
                if (bcfg.bound_names.empty()) bcfg.bound_names = file_cfg.bound_names;
                if (sc_bounds->count("--grid") == 0 && file_cfg.grid > 0) grid_m = file_cfg.grid;
                if (delta_flag == 0.0) delta_flag = file_cfg.delta;
                if (out_path.empty()) out_path = file_cfg.out;
            }
            if (bcfg.f_ids.empty())
                for (const auto& f : akr::builtin_corpus()) bcfg.f_ids.push_back(f.id);
            if (bcfg.n_list.empty()) bcfg.n_list = {4, 5, 8, 16, 32, 64, 128, 256};
            if (bcfg.j_list.empty()) bcfg.j_list = {1, 2, 3, 4};
            if (bcfg.bound_names.empty())
                bcfg.bound_names = {"PROP_2_1", "PROP_2_2_A", "PROP_2_2_B", "PROP_2_3"};
            bcfg.grid = grid_m;
            bcfg.delta = delta_flag;
            if (bcfg.out.empty()) bcfg.out = out_path;
            if (bcfg.grid < 10) throw std::invalid_argument("grid size must be >= 10");
            return cmd_bounds(bcfg, threads);
        }
        if (sc_iter->parsed()) return cmd_iterates(f_id, n, j, m_max, out_path);
        if (sc_vor->parsed()) return cmd_voronovskaya(f_id, j, xs, n_list, out_path);
        if (sc_fig->parsed()) return cmd_figure1(out_path);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: config parse failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
