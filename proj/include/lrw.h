/* lrw - local Whittle estimation of long-run variance and precision matrices.
 *
 * C interface to the estimation core. All functions return LRW_OK on success
 * or a status code; lrw_last_error() describes the most recent failure on the
 * calling thread. Objects are opaque handles released with the matching
 * *_free function. Strings returned through char** are heap-allocated and
 * released with lrw_string_free.
 */
#ifndef LRW_H
#define LRW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    LRW_OK = 0,
    LRW_E_INVALID = 1,        /* bad argument, precondition violation */
    LRW_E_IO = 2,             /* missing/unreadable file, parse failure */
    LRW_E_NUMERIC = 3,        /* not PD, degenerate series/grid, no convergence */
} lrw_status;

typedef struct lrw_series lrw_series;       /* N x p real observations */
typedef struct lrw_matrix lrw_matrix;       /* p x p complex Hermitian matrix */
typedef struct lrw_fit lrw_fit;             /* local Whittle fit + periodogram */
typedef struct lrw_threshold lrw_threshold; /* thresholding result */
typedef struct lrw_glasso lrw_glasso;       /* penalized precision path */
typedef struct lrw_dgp lrw_dgp;             /* instantiated simulation design */
typedef struct lrw_bench lrw_bench;         /* Monte Carlo report */

const char* lrw_version(void);
const char* lrw_last_error(void);
void lrw_string_free(char* s);

/* ---- series ---------------------------------------------------------- */

lrw_status lrw_series_read_csv(const char* path, int demean, lrw_series** out);
lrw_status lrw_series_from_data(int64_t n, int32_t p, const double* row_major,
                                int demean, lrw_series** out);
int64_t lrw_series_rows(const lrw_series* s);
int32_t lrw_series_cols(const lrw_series* s);
lrw_status lrw_series_to_csv(const lrw_series* s, char** out);
void lrw_series_free(lrw_series* s);

/* ---- matrices -------------------------------------------------------- */

lrw_status lrw_matrix_create(int32_t dim, const double* re, const double* im,
                             lrw_matrix** out);
int32_t lrw_matrix_dim(const lrw_matrix* m);
lrw_status lrw_matrix_get(const lrw_matrix* m, double* re, double* im);
lrw_status lrw_matrix_to_json(const lrw_matrix* m, char** out);
lrw_status lrw_matrix_from_json(const char* text, lrw_matrix** out);
lrw_status lrw_matrix_to_csv(const lrw_matrix* m, int imaginary_part, char** out);
void lrw_matrix_free(lrw_matrix* m);

/* ---- stage 1: local Whittle fit --------------------------------------- */

/* m = 0 selects the floor(N^0.8) default. Bounds are the admissible interval
 * for the memory parameters, -1/2 < delta1 < delta2 < 1/2. */
lrw_status lrw_fit_run(const lrw_series* s, int64_t m, double delta1, double delta2,
                       lrw_fit** out);
int32_t lrw_fit_dim(const lrw_fit* f);
int64_t lrw_fit_m(const lrw_fit* f);
lrw_status lrw_fit_d_hat(const lrw_fit* f, double* out /* length p */);
lrw_status lrw_fit_g_hat(const lrw_fit* f, lrw_matrix** out);
lrw_status lrw_fit_to_json(const lrw_fit* f, char** out);
void lrw_fit_free(lrw_fit* f);

/* ---- stage 2a: hard thresholding -------------------------------------- */

typedef struct {
    double rho;             /* fixed threshold; used when cross_validate == 0 */
    int cross_validate;     /* nonzero: select rho by CV over the periodogram */
    int32_t cv_splits;      /* N1; 0 picks the default 50 */
    int32_t grid_points;    /* 0 picks the default 50 */
    uint64_t seed;
    int preserve_diagonal;  /* exempt the diagonal from thresholding */
} lrw_threshold_opts;

void lrw_threshold_opts_default(lrw_threshold_opts* opts);
lrw_status lrw_threshold_run(const lrw_fit* f, const lrw_threshold_opts* opts,
                             lrw_threshold** out);
double lrw_threshold_rho(const lrw_threshold* t);
lrw_status lrw_threshold_matrix(const lrw_threshold* t, lrw_matrix** out);
lrw_status lrw_threshold_to_json(const lrw_threshold* t, char** out);
/* Empty string when rho was fixed (no curve). */
lrw_status lrw_threshold_cv_curve_csv(const lrw_threshold* t, char** out);
void lrw_threshold_free(lrw_threshold* t);

/* ---- stage 2b: graphical (penalized precision) ------------------------ */

typedef struct {
    double rho;          /* fixed penalty; used when use_ebic == 0 */
    int use_ebic;        /* nonzero: solve a path and select by eBIC */
    double gamma;        /* eBIC gamma in [0,1] */
    int32_t grid_points; /* 0 picks the default 50 */
    double mu0;
    double mu_floor;
    double mu_factor;
    int32_t mu_period;
    int32_t max_iter;
    double tol;
} lrw_glasso_opts;

void lrw_glasso_opts_default(lrw_glasso_opts* opts);
lrw_status lrw_glasso_run(const lrw_fit* f, const lrw_glasso_opts* opts, lrw_glasso** out);
lrw_status lrw_glasso_selected(const lrw_glasso* g, lrw_matrix** out);
double lrw_glasso_selected_rho(const lrw_glasso* g);
lrw_status lrw_glasso_to_json(const lrw_glasso* g, char** out);
lrw_status lrw_glasso_ebic_curve_csv(const lrw_glasso* g, char** out);
lrw_status lrw_glasso_edge_list_csv(const lrw_glasso* g, char** out);
void lrw_glasso_free(lrw_glasso* g);

/* ---- simulation -------------------------------------------------------- */

/* kind: thDGP1..thDGP3 (long-run variance designs), DGP1..DGP3 (precision
 * designs); p a positive multiple of 20. The seed draws the random memory
 * parameters from [0.1, 0.45]. */
lrw_status lrw_dgp_preset(const char* kind, int32_t p, uint64_t seed, lrw_dgp** out);
/* matrix_is_precision selects whether `matrix` is P0 (else G0). */
lrw_status lrw_dgp_custom(const double* d0, const lrw_matrix* matrix,
                          int matrix_is_precision, lrw_dgp** out);
lrw_status lrw_dgp_truth_json(const lrw_dgp* d, char** out);
lrw_status lrw_dgp_simulate(const lrw_dgp* d, int64_t n, uint64_t seed, lrw_series** out);
void lrw_dgp_free(lrw_dgp* d);

/* ---- benchmark --------------------------------------------------------- */

typedef struct {
    const char* dgp;     /* preset name */
    int32_t p;
    int64_t n;
    int32_t replications;
    const char* method;  /* "threshold-cv" or "glasso-ebic" */
    uint64_t seed;
    double delta1;
    double delta2;
    double gamma;
    int32_t threads;     /* 0 = hardware concurrency */
} lrw_bench_opts;

void lrw_bench_opts_default(lrw_bench_opts* opts);
lrw_status lrw_bench_run(const lrw_bench_opts* opts, lrw_bench** out);
lrw_status lrw_bench_to_json(const lrw_bench* b, char** out);
lrw_status lrw_bench_to_csv(const lrw_bench* b, char** out);
double lrw_bench_seconds_per_replication(const lrw_bench* b);
void lrw_bench_free(lrw_bench* b);

/* ---- theory diagnostics ------------------------------------------------ */

double lrw_diag_v1(int64_t m);
/* l may be NULL; otherwise it receives m weights. */
lrw_status lrw_diag_l_weights(int64_t m, double d0, double delta, double delta1,
                              double* ell, double* v2, double* l);
typedef struct {
    double theta1_lo, theta1_hi;
    double theta2_lo, theta2_hi; /* hi exclusive */
    int theta2_empty;
} lrw_theta_split;
lrw_status lrw_diag_theta_split(double d0, double delta1, double delta2, double delta,
                                lrw_theta_split* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LRW_H */
