#include "lrw/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <thread>

#include "lrw/glasso.hpp"
#include "lrw/rng.hpp"
#include "lrw/whittle.hpp"

namespace lrw {

BenchMethod bench_method_from_string(const std::string& name) {
    if (name == "threshold-cv") return BenchMethod::threshold_cv;
    if (name == "glasso-ebic") return BenchMethod::glasso_ebic;
    throw Error("unknown method \"" + name + "\" (expected threshold-cv or glasso-ebic)");
}

std::string bench_method_to_string(BenchMethod method) {
    return method == BenchMethod::threshold_cv ? "threshold-cv" : "glasso-ebic";
}

namespace {

SparsityMetrics one_replication(const BenchConfig& cfg, int rep) {
    const std::uint64_t root = derive_stream(cfg.seed, static_cast<std::uint64_t>(rep));
    const DgpSpec spec = dgp_preset(cfg.dgp, cfg.p, derive_stream(root, 1));
    const MultivariateSeries x = simulate(spec, cfg.n, derive_stream(root, 2));
    const PeriodogramSet pg = periodogram(x, default_m(cfg.n));
    const WhittleFit fit = fit_all(pg, cfg.delta1, cfg.delta2);
    if (cfg.method == BenchMethod::threshold_cv) {
        const std::vector<double> grid = default_rho_grid(fit.g_hat, cfg.grid_points);
        const ThresholdResult res =
            cv_threshold(pg, fit.d_hat, grid, cfg.cv_splits, derive_stream(root, 3));
        return metrics(res.g_thresholded, spec.g0, fit.d_hat.d, spec.d0, 0.0);
    }
    const GlassoPath path = glasso_path(fit.g_hat, cfg.n, cfg.gamma, {}, {}, cfg.grid_points);
    return metrics(path.estimates[path.selected], spec.p0, fit.d_hat.d, spec.d0, 1e-12);
}

MetricStats stats(const std::vector<double>& values) {
    MetricStats out;
    if (values.empty()) return out;
    double sum = 0.0;
    for (double v : values) sum += v;
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - out.mean) * (v - out.mean);
        const double var = ss / static_cast<double>(values.size() - 1);
        out.se = std::sqrt(var / static_cast<double>(values.size()));
    }
    return out;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.replications < 1) throw Error("need at least one replication");
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::optional<SparsityMetrics>> slots(static_cast<std::size_t>(cfg.replications));
    std::atomic<int> next{0};
    std::atomic<int> failures{0};
    auto worker = [&] {
        for (;;) {
            const int rep = next.fetch_add(1);
            if (rep >= cfg.replications) return;
            try {
                slots[static_cast<std::size_t>(rep)] = one_replication(cfg, rep);
            } catch (const std::exception&) {
                failures.fetch_add(1);
            }
        }
    };
    unsigned want = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                    : std::max(1u, std::thread::hardware_concurrency());
    want = std::min<unsigned>(want, static_cast<unsigned>(cfg.replications));
    if (want <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(want);
        for (unsigned t = 0; t < want; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BenchReport report;
    report.config = cfg;
    report.failures = failures.load();
    if (report.failures * 10 > cfg.replications)
        throw Error("more than 10% of replications failed (" + std::to_string(report.failures) +
                    " of " + std::to_string(cfg.replications) + ")");
    std::vector<double> miss, mse, frob, spec;
    for (const auto& slot : slots) {
        if (!slot) continue;
        report.per_replication.push_back(*slot);
        miss.push_back(slot->misspecification);
        mse.push_back(slot->mse_d);
        frob.push_back(slot->frobenius_err);
        spec.push_back(slot->spectral_err);
    }
    report.misspecification = stats(miss);
    report.mse_d = stats(mse);
    report.frobenius = stats(frob);
    report.spectral = stats(spec);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
    report.wall_sec_per_replication = elapsed.count() / static_cast<double>(cfg.replications);
    return report;
}

}  // namespace lrw
