// lrw command line front end. All computation goes through the C API in
// lrw.h; this file only parses flags and moves bytes to disk.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lrw.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNumeric = 70;

int exit_code(lrw_status st) {
    switch (st) {
        case LRW_OK: return kExitOk;
        case LRW_E_IO: return kExitIo;
        case LRW_E_NUMERIC: return kExitNumeric;
        case LRW_E_INVALID: return kExitUsage;
    }
    return kExitUsage;
}

[[noreturn]] void fail(lrw_status st) {
    std::cerr << "error: " << lrw_last_error() << "\n";
    std::exit(exit_code(st));
}

void check(lrw_status st) {
    if (st != LRW_OK) fail(st);
}

/// Take ownership of a C string result and free it.
std::string take(char* s) {
    std::string out = s ? s : "";
    lrw_string_free(s);
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(kExitIo);
    }
}

/// data/out.json + "_cv" + ".csv" -> data/out_cv.csv
std::string derived_path(const std::string& base, const std::string& suffix,
                         const std::string& ext) {
    if (base == "-") return "-";
    const std::size_t slash = base.find_last_of('/');
    const std::size_t dot = base.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return base + suffix + ext;
    return base.substr(0, dot) + suffix + ext;
}

struct GlobalOpts {
    std::uint64_t seed = 1;
    std::int64_t m = 0;  // 0 = floor(N^0.8)
    double delta1 = -0.49;
    double delta2 = 0.49;
    std::string out = "-";
    std::string format = "json";
    bool no_demean = false;
};

lrw_series* read_series(const std::string& path, const GlobalOpts& g) {
    lrw_series* series = nullptr;
    check(lrw_series_read_csv(path.c_str(), g.no_demean ? 0 : 1, &series));
    return series;
}

lrw_fit* run_fit(lrw_series* series, const GlobalOpts& g) {
    lrw_fit* fit = nullptr;
    check(lrw_fit_run(series, g.m, g.delta1, g.delta2, &fit));
    return fit;
}

void write_matrix_csv_pair(lrw_matrix* m, const std::string& base) {
    char* re = nullptr;
    char* im = nullptr;
    check(lrw_matrix_to_csv(m, 0, &re));
    check(lrw_matrix_to_csv(m, 1, &im));
    write_output(derived_path(base, "_re", ".csv"), take(re));
    write_output(derived_path(base, "_im", ".csv"), take(im));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local Whittle estimation of long-run variance and precision matrices"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value config file; flags take precedence");

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for every stochastic step");
    app.add_option("--m", g.m, "number of Fourier frequencies (default floor(N^0.8))")
        ->check(CLI::PositiveNumber);
    app.add_option("--delta1", g.delta1, "lower admissible memory bound");
    app.add_option("--delta2", g.delta2, "upper admissible memory bound");
    app.add_option("--out", g.out, "output path ('-' = stdout)");
    app.add_option("--format", g.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-demean", g.no_demean, "keep column means (default subtracts them)");

    std::string input;
    std::string rho_mode = "cv";
    std::string glasso_rho_mode = "ebic";
    int cv_splits = 50, grid_points = 50;
    bool preserve_diagonal = false;
    double gamma = 1.0, mu0 = 0.01, mu_floor = 1e-3, tol = 1e-5;
    int max_iter = 1000;
    std::string dgp = "thDGP2", method = "threshold-cv", truth_out, csv_out;
    int p = 20, reps = 100, threads = 0;
    std::int64_t n = 1000;
    std::int64_t m_from = 10, m_to = 0;
    int m_count = 25;

    CLI::App* cmd_estimate_d = app.add_subcommand("estimate-d", "memory parameters d per component");
    cmd_estimate_d->add_option("input", input, "CSV with N rows x p columns")->required();

    CLI::App* cmd_estimate_g = app.add_subcommand("estimate-g", "long-run variance matrix estimate");
    cmd_estimate_g->add_option("input", input)->required();

    CLI::App* cmd_threshold = app.add_subcommand("threshold", "hard-thresholded long-run variance");
    cmd_threshold->add_option("input", input)->required();
    cmd_threshold->add_option("--rho", rho_mode, "fixed threshold value, or 'cv'");
    cmd_threshold->add_option("--cv-splits", cv_splits)->check(CLI::PositiveNumber);
    cmd_threshold->add_option("--grid-points", grid_points)->check(CLI::Range(2, 100000));
    cmd_threshold->add_flag("--preserve-diagonal", preserve_diagonal);

    CLI::App* cmd_glasso = app.add_subcommand("glasso", "penalized precision matrix path");
    cmd_glasso->add_option("input", input)->required();
    cmd_glasso->add_option("--rho", glasso_rho_mode, "fixed penalty value, or 'ebic'");
    cmd_glasso->add_option("--gamma", gamma)->check(CLI::Range(0.0, 1.0));
    cmd_glasso->add_option("--grid-points", grid_points)->check(CLI::Range(2, 100000));
    cmd_glasso->add_option("--mu0", mu0)->check(CLI::PositiveNumber);
    cmd_glasso->add_option("--mu-floor", mu_floor)->check(CLI::PositiveNumber);
    cmd_glasso->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);
    cmd_glasso->add_option("--tol", tol)->check(CLI::PositiveNumber);

    CLI::App* cmd_simulate = app.add_subcommand("simulate", "draw a series from a DGP preset");
    cmd_simulate->add_option("--dgp", dgp, "thDGP1..3, DGP1..3");
    cmd_simulate->add_option("--p", p)->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--n", n)->check(CLI::PositiveNumber);
    cmd_simulate->add_option("--truth-out", truth_out, "write the true D/G/P as JSON");

    CLI::App* cmd_bench = app.add_subcommand("bench", "Monte Carlo benchmark over replications");
    cmd_bench->add_option("--dgp", dgp);
    cmd_bench->add_option("--p", p)->check(CLI::PositiveNumber);
    cmd_bench->add_option("--n", n)->check(CLI::PositiveNumber);
    cmd_bench->add_option("--reps", reps)->check(CLI::PositiveNumber);
    cmd_bench->add_option("--method", method)->check(CLI::IsMember({"threshold-cv", "glasso-ebic"}));
    cmd_bench->add_option("--gamma", gamma)->check(CLI::Range(0.0, 1.0));
    cmd_bench->add_option("--threads", threads)->check(CLI::NonNegativeNumber);
    cmd_bench->add_option("--csv-out", csv_out, "also write a table-layout CSV row");

    CLI::App* cmd_dsweep = app.add_subcommand("dsweep", "d estimates as a function of m");
    cmd_dsweep->add_option("input", input)->required();
    cmd_dsweep->add_option("--m-from", m_from)->check(CLI::PositiveNumber);
    cmd_dsweep->add_option("--m-to", m_to, "default floor(N/2)-1")->check(CLI::PositiveNumber);
    cmd_dsweep->add_option("--m-count", m_count)->check(CLI::Range(2, 100000));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (cmd_estimate_d->parsed() || cmd_estimate_g->parsed()) {
        lrw_series* series = read_series(input, g);
        lrw_fit* fit = run_fit(series, g);
        if (cmd_estimate_d->parsed()) {
            if (g.format == "json") {
                char* json = nullptr;
                check(lrw_fit_to_json(fit, &json));
                write_output(g.out, take(json));
            } else {
                std::string csv = "component,d_hat\n";
                std::vector<double> d(static_cast<std::size_t>(lrw_fit_dim(fit)));
                check(lrw_fit_d_hat(fit, d.data()));
                char buf[48];
                for (std::size_t r = 0; r < d.size(); ++r) {
                    std::snprintf(buf, sizeof buf, "%zu,%.17g\n", r + 1, d[r]);
                    csv += buf;
                }
                write_output(g.out, csv);
            }
        } else {
            lrw_matrix* ghat = nullptr;
            check(lrw_fit_g_hat(fit, &ghat));
            if (g.format == "json") {
                char* json = nullptr;
                check(lrw_matrix_to_json(ghat, &json));
                write_output(g.out, take(json));
            } else {
                write_matrix_csv_pair(ghat, g.out == "-" ? "ghat.csv" : g.out);
            }
            lrw_matrix_free(ghat);
        }
        lrw_fit_free(fit);
        lrw_series_free(series);
        return kExitOk;
    }

    if (cmd_threshold->parsed()) {
        lrw_series* series = read_series(input, g);
        lrw_fit* fit = run_fit(series, g);
        lrw_threshold_opts opts;
        lrw_threshold_opts_default(&opts);
        opts.cv_splits = cv_splits;
        opts.grid_points = grid_points;
        opts.seed = g.seed;
        opts.preserve_diagonal = preserve_diagonal ? 1 : 0;
        if (rho_mode != "cv") {
            opts.cross_validate = 0;
            try {
                opts.rho = std::stod(rho_mode);
            } catch (const std::exception&) {
                std::cerr << "error: --rho expects a number or 'cv'\n";
                return kExitUsage;
            }
        }
        lrw_threshold* result = nullptr;
        check(lrw_threshold_run(fit, &opts, &result));
        char* json = nullptr;
        check(lrw_threshold_to_json(result, &json));
        write_output(g.out, take(json));
        if (opts.cross_validate) {
            char* curve = nullptr;
            check(lrw_threshold_cv_curve_csv(result, &curve));
            write_output(derived_path(g.out == "-" ? "threshold.json" : g.out, "_cv", ".csv"),
                         take(curve));
        }
        lrw_matrix* mat = nullptr;
        check(lrw_threshold_matrix(result, &mat));
        write_matrix_csv_pair(mat, g.out == "-" ? "threshold.json" : g.out);
        lrw_matrix_free(mat);
        lrw_threshold_free(result);
        lrw_fit_free(fit);
        lrw_series_free(series);
        return kExitOk;
    }

    if (cmd_glasso->parsed()) {
        lrw_series* series = read_series(input, g);
        lrw_fit* fit = run_fit(series, g);
        lrw_glasso_opts opts;
        lrw_glasso_opts_default(&opts);
        opts.gamma = gamma;
        opts.grid_points = grid_points;
        opts.mu0 = mu0;
        opts.mu_floor = mu_floor;
        opts.max_iter = max_iter;
        opts.tol = tol;
        if (glasso_rho_mode != "ebic") {
            opts.use_ebic = 0;
            try {
                opts.rho = std::stod(glasso_rho_mode);
            } catch (const std::exception&) {
                std::cerr << "error: --rho expects a number or 'ebic'\n";
                return kExitUsage;
            }
        }
        lrw_glasso* path = nullptr;
        check(lrw_glasso_run(fit, &opts, &path));
        char* json = nullptr;
        check(lrw_glasso_to_json(path, &json));
        write_output(g.out, take(json));
        const std::string base = g.out == "-" ? "glasso.json" : g.out;
        if (opts.use_ebic) {
            char* curve = nullptr;
            check(lrw_glasso_ebic_curve_csv(path, &curve));
            write_output(derived_path(base, "_ebic", ".csv"), take(curve));
        }
        char* edges = nullptr;
        check(lrw_glasso_edge_list_csv(path, &edges));
        write_output(derived_path(base, "_edges", ".csv"), take(edges));
        lrw_glasso_free(path);
        lrw_fit_free(fit);
        lrw_series_free(series);
        return kExitOk;
    }

    if (cmd_simulate->parsed()) {
        lrw_dgp* spec = nullptr;
        check(lrw_dgp_preset(dgp.c_str(), p, g.seed, &spec));
        lrw_series* series = nullptr;
        check(lrw_dgp_simulate(spec, n, g.seed, &series));
        char* csv = nullptr;
        check(lrw_series_to_csv(series, &csv));
        write_output(g.out, take(csv));
        if (!truth_out.empty()) {
            char* truth = nullptr;
            check(lrw_dgp_truth_json(spec, &truth));
            write_output(truth_out, take(truth));
        }
        lrw_series_free(series);
        lrw_dgp_free(spec);
        return kExitOk;
    }

    if (cmd_bench->parsed()) {
        lrw_bench_opts opts;
        lrw_bench_opts_default(&opts);
        opts.dgp = dgp.c_str();
        opts.p = p;
        opts.n = n;
        opts.replications = reps;
        opts.method = method.c_str();
        opts.seed = g.seed;
        opts.delta1 = g.delta1;
        opts.delta2 = g.delta2;
        opts.gamma = gamma;
        opts.threads = threads;
        lrw_bench* report = nullptr;
        check(lrw_bench_run(&opts, &report));
        char* json = nullptr;
        check(lrw_bench_to_json(report, &json));
        write_output(g.out, take(json));
        if (!csv_out.empty()) {
            char* csv = nullptr;
            check(lrw_bench_to_csv(report, &csv));
            write_output(csv_out, take(csv));
        }
        std::fprintf(stderr, "bench: %.3f s per replication\n",
                     lrw_bench_seconds_per_replication(report));
        lrw_bench_free(report);
        return kExitOk;
    }

    if (cmd_dsweep->parsed()) {
        lrw_series* series = read_series(input, g);
        const std::int64_t n_rows = lrw_series_rows(series);
        const std::int64_t hi = m_to > 0 ? m_to : n_rows / 2 - 1;
        if (hi < m_from) {
            std::cerr << "error: --m-to must be at least --m-from\n";
            return kExitUsage;
        }
        const int cols = lrw_series_cols(series);
        std::string csv = "m";
        for (int r = 1; r <= cols; ++r) csv += ",d" + std::to_string(r);
        csv += '\n';
        std::vector<double> d(static_cast<std::size_t>(cols));
        char buf[48];
        std::int64_t prev = -1;
        for (int i = 0; i < m_count; ++i) {
            const double t = m_count == 1 ? 0.0 : static_cast<double>(i) / (m_count - 1);
            const auto m = static_cast<std::int64_t>(m_from + t * static_cast<double>(hi - m_from));
            if (m == prev) continue;
            prev = m;
            lrw_fit* fit = nullptr;
            check(lrw_fit_run(series, m, g.delta1, g.delta2, &fit));
            check(lrw_fit_d_hat(fit, d.data()));
            csv += std::to_string(m);
            for (double v : d) {
                std::snprintf(buf, sizeof buf, ",%.17g", v);
                csv += buf;
            }
            csv += '\n';
            lrw_fit_free(fit);
        }
        write_output(g.out, csv);
        lrw_series_free(series);
        return kExitOk;
    }

    return kExitUsage;
}
