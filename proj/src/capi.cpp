#include "lrw.h"

#include <cstring>
#include <string>

#include "lrw/bench.hpp"
#include "lrw/errors.hpp"
#include "lrw/glasso.hpp"
#include "lrw/serialize.hpp"
#include "lrw/shrinkage.hpp"
#include "lrw/spectrum.hpp"
#include "lrw/synthdgp.hpp"
#include "lrw/theory_diag.hpp"
#include "lrw/whittle.hpp"

struct lrw_series {
    lrw::MultivariateSeries value;
};
struct lrw_matrix {
    lrw::HermitianMatrix value;
};
struct lrw_fit {
    lrw::PeriodogramSet periodogram;
    lrw::WhittleFit fit;
};
struct lrw_threshold {
    lrw::ThresholdResult value;
    bool cross_validated;
};
struct lrw_glasso {
    lrw::GlassoPath path;
    double gamma;
};
struct lrw_dgp {
    lrw::DgpSpec value;
};
struct lrw_bench {
    lrw::BenchReport value;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

/// Run `fn`, translating exceptions into status codes.
template <typename Fn>
lrw_status guarded(Fn&& fn) {
    try {
        fn();
        return LRW_OK;
    } catch (const lrw::IoError& e) {
        set_error(e.what());
        return LRW_E_IO;
    } catch (const lrw::ParseError& e) {
        set_error(e.what());
        return LRW_E_IO;
    } catch (const lrw::NotPositiveDefinite& e) {
        set_error(e.what());
        return LRW_E_NUMERIC;
    } catch (const lrw::DegenerateSeries& e) {
        set_error(e.what());
        return LRW_E_NUMERIC;
    } catch (const lrw::DegenerateGrid& e) {
        set_error(e.what());
        return LRW_E_NUMERIC;
    } catch (const lrw::InvalidFrequencyCount& e) {
        set_error(e.what());
        return LRW_E_INVALID;
    } catch (const lrw::InvalidDimension& e) {
        set_error(e.what());
        return LRW_E_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return LRW_E_INVALID;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lrw_status require(bool ok, const char* message) {
    if (ok) return LRW_OK;
    set_error(message);
    return LRW_E_INVALID;
}

}  // namespace

extern "C" {

const char* lrw_version(void) { return "0.1.0"; }

const char* lrw_last_error(void) { return g_last_error.c_str(); }

void lrw_string_free(char* s) { delete[] s; }

/* ---- series ---------------------------------------------------------- */

lrw_status lrw_series_read_csv(const char* path, int demean, lrw_series** out) {
    if (lrw_status st = require(path && out, "path and out must be non-null")) return st;
    return guarded([&] { *out = new lrw_series{lrw::read_series_csv(path, demean != 0)}; });
}

lrw_status lrw_series_from_data(int64_t n, int32_t p, const double* row_major, int demean,
                                lrw_series** out) {
    if (lrw_status st = require(row_major && out && n > 0 && p > 0, "invalid data buffer"))
        return st;
    return guarded([&] {
        Eigen::MatrixXd values(n, p);
        for (int64_t r = 0; r < n; ++r)
            for (int32_t c = 0; c < p; ++c) values(r, c) = row_major[r * p + c];
        lrw::MultivariateSeries series(std::move(values));
        *out = new lrw_series{demean ? series.demeaned() : series};
    });
}

int64_t lrw_series_rows(const lrw_series* s) { return s ? s->value.n() : 0; }

int32_t lrw_series_cols(const lrw_series* s) { return s ? s->value.p() : 0; }

lrw_status lrw_series_to_csv(const lrw_series* s, char** out) {
    if (lrw_status st = require(s && out, "series and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::series_to_csv(s->value)); });
}

void lrw_series_free(lrw_series* s) { delete s; }

/* ---- matrices -------------------------------------------------------- */

lrw_status lrw_matrix_create(int32_t dim, const double* re, const double* im, lrw_matrix** out) {
    if (lrw_status st = require(re && im && out && dim > 0, "invalid matrix buffer")) return st;
    return guarded([&] {
        Eigen::MatrixXcd m(dim, dim);
        for (int32_t r = 0; r < dim; ++r)
            for (int32_t s = 0; s < dim; ++s) {
                const std::size_t k = static_cast<std::size_t>(r) * dim + s;
                m(r, s) = lrw::Complex(re[k], im[k]);
            }
        *out = new lrw_matrix{lrw::HermitianMatrix(m)};
    });
}

int32_t lrw_matrix_dim(const lrw_matrix* m) { return m ? m->value.dim() : 0; }

lrw_status lrw_matrix_get(const lrw_matrix* m, double* re, double* im) {
    if (lrw_status st = require(m && re && im, "matrix and buffers must be non-null")) return st;
    const int p = m->value.dim();
    for (int r = 0; r < p; ++r)
        for (int s = 0; s < p; ++s) {
            const std::size_t k = static_cast<std::size_t>(r) * p + s;
            re[k] = m->value(r, s).real();
            im[k] = m->value(r, s).imag();
        }
    return LRW_OK;
}

lrw_status lrw_matrix_to_json(const lrw_matrix* m, char** out) {
    if (lrw_status st = require(m && out, "matrix and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::matrix_to_json(m->value)); });
}

lrw_status lrw_matrix_from_json(const char* text, lrw_matrix** out) {
    if (lrw_status st = require(text && out, "text and out must be non-null")) return st;
    return guarded([&] { *out = new lrw_matrix{lrw::matrix_from_json(text)}; });
}

lrw_status lrw_matrix_to_csv(const lrw_matrix* m, int imaginary_part, char** out) {
    if (lrw_status st = require(m && out, "matrix and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::matrix_to_csv(m->value, imaginary_part != 0)); });
}

void lrw_matrix_free(lrw_matrix* m) { delete m; }

/* ---- whittle ----------------------------------------------------------- */

lrw_status lrw_fit_run(const lrw_series* s, int64_t m, double delta1, double delta2,
                       lrw_fit** out) {
    if (lrw_status st = require(s && out, "series and out must be non-null")) return st;
    return guarded([&] {
        const int64_t use_m = m == 0 ? lrw::default_m(s->value.n()) : m;
        lrw::PeriodogramSet pg = lrw::periodogram(s->value, use_m);
        lrw::WhittleFit fit = lrw::fit_all(pg, delta1, delta2);
        *out = new lrw_fit{std::move(pg), std::move(fit)};
    });
}

int32_t lrw_fit_dim(const lrw_fit* f) { return f ? f->periodogram.p() : 0; }

int64_t lrw_fit_m(const lrw_fit* f) { return f ? f->fit.m : 0; }

lrw_status lrw_fit_d_hat(const lrw_fit* f, double* out) {
    if (lrw_status st = require(f && out, "fit and out must be non-null")) return st;
    for (Eigen::Index r = 0; r < f->fit.d_hat.d.size(); ++r) out[r] = f->fit.d_hat.d[r];
    return LRW_OK;
}

lrw_status lrw_fit_g_hat(const lrw_fit* f, lrw_matrix** out) {
    if (lrw_status st = require(f && out, "fit and out must be non-null")) return st;
    *out = new lrw_matrix{f->fit.g_hat};
    return LRW_OK;
}

lrw_status lrw_fit_to_json(const lrw_fit* f, char** out) {
    if (lrw_status st = require(f && out, "fit and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::whittle_fit_to_json(f->fit)); });
}

void lrw_fit_free(lrw_fit* f) { delete f; }

/* ---- threshold --------------------------------------------------------- */

void lrw_threshold_opts_default(lrw_threshold_opts* opts) {
    if (!opts) return;
    *opts = lrw_threshold_opts{};
    opts->cross_validate = 1;
    opts->cv_splits = 50;
    opts->grid_points = 50;
    opts->seed = 1;
}

lrw_status lrw_threshold_run(const lrw_fit* f, const lrw_threshold_opts* opts,
                             lrw_threshold** out) {
    if (lrw_status st = require(f && opts && out, "fit, opts, out must be non-null")) return st;
    return guarded([&] {
        const bool preserve = opts->preserve_diagonal != 0;
        if (opts->cross_validate) {
            const int splits = opts->cv_splits > 0 ? opts->cv_splits : 50;
            const int points = opts->grid_points > 0 ? opts->grid_points : 50;
            const std::vector<double> grid = lrw::default_rho_grid(f->fit.g_hat, points);
            lrw::ThresholdResult res = lrw::cv_threshold(f->periodogram, f->fit.d_hat, grid,
                                                         splits, opts->seed, preserve);
            *out = new lrw_threshold{std::move(res), true};
        } else {
            if (opts->rho < 0.0) throw lrw::Error("threshold must be nonnegative");
            lrw::ThresholdResult res;
            res.rho_hat = opts->rho;
            res.g_thresholded = lrw::hard_threshold(f->fit.g_hat, opts->rho, preserve);
            res.splits_used = 0;
            *out = new lrw_threshold{std::move(res), false};
        }
    });
}

double lrw_threshold_rho(const lrw_threshold* t) { return t ? t->value.rho_hat : 0.0; }

lrw_status lrw_threshold_matrix(const lrw_threshold* t, lrw_matrix** out) {
    if (lrw_status st = require(t && out, "result and out must be non-null")) return st;
    *out = new lrw_matrix{t->value.g_thresholded};
    return LRW_OK;
}

lrw_status lrw_threshold_to_json(const lrw_threshold* t, char** out) {
    if (lrw_status st = require(t && out, "result and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::threshold_result_to_json(t->value)); });
}

lrw_status lrw_threshold_cv_curve_csv(const lrw_threshold* t, char** out) {
    if (lrw_status st = require(t && out, "result and out must be non-null")) return st;
    return guarded([&] {
        *out = copy_string(t->cross_validated ? lrw::cv_curve_to_csv(t->value) : std::string());
    });
}

void lrw_threshold_free(lrw_threshold* t) { delete t; }

/* ---- glasso ------------------------------------------------------------ */

void lrw_glasso_opts_default(lrw_glasso_opts* opts) {
    if (!opts) return;
    *opts = lrw_glasso_opts{};
    opts->use_ebic = 1;
    opts->gamma = 1.0;
    opts->grid_points = 50;
    const lrw::AlmConfig cfg;
    opts->mu0 = cfg.mu0;
    opts->mu_floor = cfg.mu_floor;
    opts->mu_factor = cfg.mu_factor;
    opts->mu_period = cfg.mu_period;
    opts->max_iter = cfg.max_iter;
    opts->tol = cfg.tol;
}

lrw_status lrw_glasso_run(const lrw_fit* f, const lrw_glasso_opts* opts, lrw_glasso** out) {
    if (lrw_status st = require(f && opts && out, "fit, opts, out must be non-null")) return st;
    return guarded([&] {
        lrw::AlmConfig cfg;
        if (opts->mu0 > 0) cfg.mu0 = opts->mu0;
        if (opts->mu_floor > 0) cfg.mu_floor = opts->mu_floor;
        if (opts->mu_factor > 0) cfg.mu_factor = opts->mu_factor;
        if (opts->mu_period > 0) cfg.mu_period = opts->mu_period;
        if (opts->max_iter > 0) cfg.max_iter = opts->max_iter;
        if (opts->tol > 0) cfg.tol = opts->tol;
        const int points = opts->grid_points > 0 ? opts->grid_points : 50;
        std::vector<double> grid;
        if (!opts->use_ebic) grid = {opts->rho};
        lrw::GlassoPath path = lrw::glasso_path(f->fit.g_hat, f->periodogram.n(), opts->gamma,
                                                std::move(grid), cfg, points);
        *out = new lrw_glasso{std::move(path), opts->gamma};
    });
}

lrw_status lrw_glasso_selected(const lrw_glasso* g, lrw_matrix** out) {
    if (lrw_status st = require(g && out, "path and out must be non-null")) return st;
    *out = new lrw_matrix{g->path.estimates[g->path.selected]};
    return LRW_OK;
}

double lrw_glasso_selected_rho(const lrw_glasso* g) {
    return g ? g->path.rhos[g->path.selected] : 0.0;
}

lrw_status lrw_glasso_to_json(const lrw_glasso* g, char** out) {
    if (lrw_status st = require(g && out, "path and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::glasso_path_to_json(g->path, g->gamma)); });
}

lrw_status lrw_glasso_ebic_curve_csv(const lrw_glasso* g, char** out) {
    if (lrw_status st = require(g && out, "path and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::ebic_curve_to_csv(g->path)); });
}

lrw_status lrw_glasso_edge_list_csv(const lrw_glasso* g, char** out) {
    if (lrw_status st = require(g && out, "path and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::edge_list_to_csv(g->path)); });
}

void lrw_glasso_free(lrw_glasso* g) { delete g; }

/* ---- simulation -------------------------------------------------------- */

lrw_status lrw_dgp_preset(const char* kind, int32_t p, uint64_t seed, lrw_dgp** out) {
    if (lrw_status st = require(kind && out, "kind and out must be non-null")) return st;
    return guarded(
        [&] { *out = new lrw_dgp{lrw::dgp_preset(lrw::dgp_kind_from_string(kind), p, seed)}; });
}

lrw_status lrw_dgp_custom(const double* d0, const lrw_matrix* matrix, int matrix_is_precision,
                          lrw_dgp** out) {
    if (lrw_status st = require(d0 && matrix && out, "d0, matrix, out must be non-null"))
        return st;
    return guarded([&] {
        Eigen::VectorXd d(matrix->value.dim());
        for (int r = 0; r < matrix->value.dim(); ++r) d[r] = d0[r];
        *out = new lrw_dgp{lrw::dgp_custom(std::move(d), matrix->value, matrix_is_precision != 0)};
    });
}

lrw_status lrw_dgp_truth_json(const lrw_dgp* d, char** out) {
    if (lrw_status st = require(d && out, "dgp and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::dgp_spec_to_json(d->value)); });
}

lrw_status lrw_dgp_simulate(const lrw_dgp* d, int64_t n, uint64_t seed, lrw_series** out) {
    if (lrw_status st = require(d && out, "dgp and out must be non-null")) return st;
    return guarded([&] { *out = new lrw_series{lrw::simulate(d->value, n, seed)}; });
}

void lrw_dgp_free(lrw_dgp* d) { delete d; }

/* ---- benchmark --------------------------------------------------------- */

void lrw_bench_opts_default(lrw_bench_opts* opts) {
    if (!opts) return;
    *opts = lrw_bench_opts{};
    opts->dgp = "thDGP2";
    opts->p = 20;
    opts->n = 1000;
    opts->replications = 100;
    opts->method = "threshold-cv";
    opts->seed = 1;
    opts->delta1 = -0.49;
    opts->delta2 = 0.49;
    opts->gamma = 1.0;
}

lrw_status lrw_bench_run(const lrw_bench_opts* opts, lrw_bench** out) {
    if (lrw_status st = require(opts && out && opts->dgp && opts->method,
                                "opts (with dgp and method) and out must be non-null"))
        return st;
    return guarded([&] {
        lrw::BenchConfig cfg;
        cfg.dgp = lrw::dgp_kind_from_string(opts->dgp);
        cfg.p = opts->p;
        cfg.n = opts->n;
        cfg.replications = opts->replications;
        cfg.method = lrw::bench_method_from_string(opts->method);
        cfg.seed = opts->seed;
        cfg.delta1 = opts->delta1;
        cfg.delta2 = opts->delta2;
        cfg.gamma = opts->gamma;
        cfg.threads = opts->threads;
        *out = new lrw_bench{lrw::run_bench(cfg)};
    });
}

lrw_status lrw_bench_to_json(const lrw_bench* b, char** out) {
    if (lrw_status st = require(b && out, "report and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::bench_report_to_json(b->value)); });
}

lrw_status lrw_bench_to_csv(const lrw_bench* b, char** out) {
    if (lrw_status st = require(b && out, "report and out must be non-null")) return st;
    return guarded([&] { *out = copy_string(lrw::bench_report_to_csv(b->value)); });
}

double lrw_bench_seconds_per_replication(const lrw_bench* b) {
    return b ? b->value.wall_sec_per_replication : 0.0;
}

void lrw_bench_free(lrw_bench* b) { delete b; }

/* ---- theory diagnostics ------------------------------------------------ */

double lrw_diag_v1(int64_t m) { return lrw::diag::v1(m); }

lrw_status lrw_diag_l_weights(int64_t m, double d0, double delta, double delta1, double* ell,
                              double* v2, double* l) {
    if (lrw_status st = require(ell && v2, "ell and v2 must be non-null")) return st;
    return guarded([&] {
        const lrw::diag::LWeights w = lrw::diag::l_weights(m, d0, delta, delta1);
        *ell = w.ell;
        *v2 = w.v2;
        if (l)
            for (Eigen::Index j = 0; j < w.l.size(); ++j) l[j] = w.l[j];
    });
}

lrw_status lrw_diag_theta_split(double d0, double delta1, double delta2, double delta,
                                lrw_theta_split* out) {
    if (lrw_status st = require(out != nullptr, "out must be non-null")) return st;
    return guarded([&] {
        const lrw::diag::ThetaSplit split = lrw::diag::theta_split(d0, delta1, delta2, delta);
        out->theta1_lo = split.theta1.lo;
        out->theta1_hi = split.theta1.hi;
        out->theta2_lo = split.theta2.lo;
        out->theta2_hi = split.theta2.hi;
        out->theta2_empty = split.theta2.empty ? 1 : 0;
    });
}

} /* extern "C" */
