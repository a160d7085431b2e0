#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrw/shrinkage.hpp"
#include "lrw/synthdgp.hpp"

namespace lrw {

enum class BenchMethod { threshold_cv, glasso_ebic };

BenchMethod bench_method_from_string(const std::string& name);
std::string bench_method_to_string(BenchMethod method);

struct BenchConfig {
    DgpKind dgp = DgpKind::thDGP2;
    int p = 20;
    std::int64_t n = 1000;
    int replications = 100;
    BenchMethod method = BenchMethod::threshold_cv;
    std::uint64_t seed = 1;
    double delta1 = -0.49;
    double delta2 = 0.49;
    double gamma = 1.0;   // eBIC
    int cv_splits = 50;
    int grid_points = 50;
    int threads = 0;      // 0 = hardware concurrency
};

struct MetricStats {
    double mean = 0.0;
    double se = 0.0;  // standard error of the mean; 0 when only one replication
};

struct BenchReport {
    BenchConfig config;
    MetricStats misspecification, mse_d, frobenius, spectral;
    std::vector<SparsityMetrics> per_replication;  // successful ones, in order
    int failures = 0;
    double wall_sec_per_replication = 0.0;  // not serialized; see C API / stderr
};

/// Monte Carlo driver: per replication simulate -> fit_all(default_m) ->
/// threshold-cv or glasso-ebic -> metrics against the planted truth (G0 for
/// thresholding, P0 for the graphical method). Memory parameters are re-drawn
/// per replication. Replications run on a worker pool with per-index derived
/// substreams; aggregation is in index order, so reports are deterministic.
/// Throws when more than 10% of replications fail.
BenchReport run_bench(const BenchConfig& cfg);

}  // namespace lrw
