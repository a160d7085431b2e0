#include <doctest.h>
#include <json.hpp>

#include <cstring>
#include <string>
#include <vector>

#include "lrw.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    lrw_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("c api pipeline: simulate, fit, threshold, glasso") {
    lrw_dgp* dgp = nullptr;
    REQUIRE(lrw_dgp_preset("thDGP2", 20, 5, &dgp) == LRW_OK);
    const std::string truth = take([&] {
        char* s = nullptr;
        REQUIRE(lrw_dgp_truth_json(dgp, &s) == LRW_OK);
        return s;
    }());
    CHECK(truth.find("\"g0\"") != std::string::npos);

    lrw_series* series = nullptr;
    REQUIRE(lrw_dgp_simulate(dgp, 512, 3, &series) == LRW_OK);
    CHECK(lrw_series_rows(series) == 512);
    CHECK(lrw_series_cols(series) == 20);

    lrw_fit* fit = nullptr;
    REQUIRE(lrw_fit_run(series, 0, -0.49, 0.49, &fit) == LRW_OK);
    CHECK(lrw_fit_m(fit) == 147);  // floor(512^0.8)
    std::vector<double> d(20);
    REQUIRE(lrw_fit_d_hat(fit, d.data()) == LRW_OK);
    for (double v : d) {
        CHECK(v >= -0.49);
        CHECK(v <= 0.49);
    }

    lrw_threshold_opts topts;
    lrw_threshold_opts_default(&topts);
    topts.seed = 11;
    lrw_threshold* th = nullptr;
    REQUIRE(lrw_threshold_run(fit, &topts, &th) == LRW_OK);
    CHECK(lrw_threshold_rho(th) > 0.0);
    CHECK(take([&] {
              char* s = nullptr;
              REQUIRE(lrw_threshold_cv_curve_csv(th, &s) == LRW_OK);
              return s;
          }())
              .rfind("rho,risk", 0) == 0);

    lrw_glasso_opts gopts;
    lrw_glasso_opts_default(&gopts);
    gopts.grid_points = 10;
    lrw_glasso* gl = nullptr;
    REQUIRE(lrw_glasso_run(fit, &gopts, &gl) == LRW_OK);
    lrw_matrix* p_hat = nullptr;
    REQUIRE(lrw_glasso_selected(gl, &p_hat) == LRW_OK);
    CHECK(lrw_matrix_dim(p_hat) == 20);
    CHECK(take([&] {
              char* s = nullptr;
              REQUIRE(lrw_glasso_edge_list_csv(gl, &s) == LRW_OK);
              return s;
          }())
              .rfind("r,s,re,im", 0) == 0);

    // every JSON artifact re-parses and carries its contract keys
    const auto parsed = [](const std::string& text) { return nlohmann::json::parse(text); };
    {
        char* s = nullptr;
        REQUIRE(lrw_fit_to_json(fit, &s) == LRW_OK);
        const auto j = parsed(take(s));
        CHECK(j.contains("d_hat"));
        CHECK(j.contains("bounds"));
        CHECK(j["g_hat"]["dim"] == 20);
    }
    {
        char* s = nullptr;
        REQUIRE(lrw_threshold_to_json(th, &s) == LRW_OK);
        const auto j = parsed(take(s));
        CHECK(j.contains("rho_hat"));
        CHECK(j["cv_curve"].size() == 50);
        CHECK(j["splits_used"] == 50);
    }
    {
        char* s = nullptr;
        REQUIRE(lrw_glasso_to_json(gl, &s) == LRW_OK);
        const auto j = parsed(take(s));
        CHECK(j["rhos"].size() == 10);
        CHECK(j.contains("selected_rho"));
        CHECK(j["p_hat"]["re"].size() == 400);
    }

    lrw_matrix_free(p_hat);
    lrw_glasso_free(gl);
    lrw_threshold_free(th);
    lrw_fit_free(fit);
    lrw_series_free(series);
    lrw_dgp_free(dgp);
}

TEST_CASE("bench report json re-parses with per-replication detail") {
    lrw_bench_opts opts;
    lrw_bench_opts_default(&opts);
    opts.n = 200;
    opts.replications = 2;
    opts.threads = 2;
    lrw_bench* report = nullptr;
    REQUIRE(lrw_bench_run(&opts, &report) == LRW_OK);
    char* s = nullptr;
    REQUIRE(lrw_bench_to_json(report, &s) == LRW_OK);
    const auto j = nlohmann::json::parse(take(s));
    CHECK(j["config"]["dgp"] == "thDGP2");
    CHECK(j["per_replication"].size() == 2);
    CHECK(j["misspecification"].contains("se"));
    CHECK(!j.contains("wall_sec_per_replication"));
    CHECK(lrw_bench_seconds_per_replication(report) > 0.0);
    lrw_bench_free(report);
}

TEST_CASE("c api error codes and messages") {
    lrw_series* series = nullptr;
    CHECK(lrw_series_read_csv("/no/such/file.csv", 1, &series) == LRW_E_IO);
    CHECK(std::string(lrw_last_error()).find("/no/such/file.csv") != std::string::npos);

    const double data[] = {1, 2, 3, 4, 5, 6, 7, 8};
    REQUIRE(lrw_series_from_data(8, 1, data, 0, &series) == LRW_OK);
    lrw_fit* fit = nullptr;
    CHECK(lrw_fit_run(series, 99, -0.49, 0.49, &fit) == LRW_E_INVALID);  // m too large
    CHECK(lrw_fit_run(series, 3, 0.3, 0.2, &fit) == LRW_E_INVALID);     // bad bounds
    lrw_series_free(series);

    // degenerate column is a numeric failure
    const double zeros[] = {0, 0, 0, 0, 0, 0, 0, 0};
    REQUIRE(lrw_series_from_data(8, 1, zeros, 0, &series) == LRW_OK);
    CHECK(lrw_fit_run(series, 3, -0.49, 0.49, &fit) == LRW_E_NUMERIC);
    lrw_series_free(series);

    lrw_dgp* dgp = nullptr;
    CHECK(lrw_dgp_preset("thDGP1", 21, 1, &dgp) == LRW_E_INVALID);
    CHECK(lrw_dgp_preset("DGP7", 20, 1, &dgp) == LRW_E_INVALID);
}

TEST_CASE("c api matrices round trip") {
    const double re[] = {1.0, 0.25, 0.25, 2.0};
    const double im[] = {0.0, 0.5, -0.5, 0.0};
    lrw_matrix* m = nullptr;
    REQUIRE(lrw_matrix_create(2, re, im, &m) == LRW_OK);
    const std::string json = take([&] {
        char* s = nullptr;
        REQUIRE(lrw_matrix_to_json(m, &s) == LRW_OK);
        return s;
    }());
    lrw_matrix* back = nullptr;
    REQUIRE(lrw_matrix_from_json(json.c_str(), &back) == LRW_OK);
    double re2[4], im2[4];
    REQUIRE(lrw_matrix_get(back, re2, im2) == LRW_OK);
    for (int i = 0; i < 4; ++i) {
        CHECK(re2[i] == re[i]);
        CHECK(im2[i] == im[i]);
    }
    lrw_matrix_free(m);
    lrw_matrix_free(back);

    // non-Hermitian input rejected
    const double bad_im[] = {0.0, 0.5, 0.5, 0.0};
    CHECK(lrw_matrix_create(2, re, bad_im, &m) == LRW_E_INVALID);
}

TEST_CASE("c api diagnostics surface") {
    CHECK(lrw_diag_v1(2) == doctest::Approx(1.0 / 24.0));
    double ell = 0.0, v2 = 0.0;
    std::vector<double> l(100);
    REQUIRE(lrw_diag_l_weights(100, 0.3, 0.1, 0.0, &ell, &v2, l.data()) == LRW_OK);
    CHECK(ell > 30.0);
    CHECK(l[0] > 1.0);
    lrw_theta_split split;
    REQUIRE(lrw_diag_theta_split(0.4, -0.1, 0.45, 0.05, &split) == LRW_OK);
    CHECK(split.theta2_empty == 0);
    CHECK(split.theta1_lo == doctest::Approx(-0.05));
}
