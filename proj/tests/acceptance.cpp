// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. The CLI path for the determinism criterion comes from argv[1].

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lrw/bench.hpp"
#include "lrw/glasso.hpp"
#include "lrw/rng.hpp"
#include "lrw/serialize.hpp"
#include "lrw/synthdgp.hpp"
#include "lrw/theory_diag.hpp"
#include "lrw/whittle.hpp"

using namespace lrw;

namespace {

std::string g_cli = "../bin/lrw";

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    explicit Checker(Outcome& out) : out_(out) {}
    void require(bool ok, const std::string& what) {
        if (!out_.detail.empty()) out_.detail += "; ";
        out_.detail += what;
        if (!ok) {
            out_.pass = false;
            out_.detail += " [FAILED]";
        }
    }

private:
    Outcome& out_;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

MultivariateSeries gaussian_noise(std::int64_t n, int p, std::uint64_t seed) {
    Philox rng(seed, 0);
    Eigen::MatrixXd values(n, p);
    for (int c = 0; c < p; ++c)
        for (std::int64_t r = 0; r < n; ++r) values(r, c) = rng.normal();
    return MultivariateSeries(std::move(values));
}

BenchReport bench_cell(DgpKind kind, std::int64_t n, int reps, BenchMethod method,
                       std::uint64_t seed) {
    BenchConfig cfg;
    cfg.dgp = kind;
    cfg.p = 20;
    cfg.n = n;
    cfg.replications = reps;
    cfg.method = method;
    cfg.seed = seed;
    return run_bench(cfg);
}

Outcome criterion1(BenchReport& saved_n1000) {
    Outcome out;
    Checker c(out);
    const auto start = std::chrono::steady_clock::now();
    saved_n1000 = bench_cell(DgpKind::thDGP2, 1000, 100, BenchMethod::threshold_cv, 1);
    const double elapsed = seconds_since(start);
    const double mse = saved_n1000.mse_d.mean;
    const double miss = saved_n1000.misspecification.mean;
    const double frob = saved_n1000.frobenius.mean;
    c.require(mse >= 0.001 && mse <= 0.009, "MSE(D)=" + fmt(mse) + " in [0.001,0.009]");
    c.require(miss <= 3.0, "misspecification=" + fmt(miss) + " <= 3");
    c.require(frob >= 0.6 && frob <= 1.8, "Frobenius=" + fmt(frob) + " in [0.6,1.8]");
    c.require(elapsed <= 600.0, "runtime " + fmt(elapsed) + "s <= 600s");
    return out;
}

Outcome criterion2(const BenchReport& n1000) {
    Outcome out;
    Checker c(out);
    const BenchReport n200 = bench_cell(DgpKind::thDGP2, 200, 100, BenchMethod::threshold_cv, 1);
    const auto below = [&](const MetricStats& large_n, const MetricStats& small_n,
                           const char* name) {
        const double slack = std::sqrt(large_n.se * large_n.se + small_n.se * small_n.se);
        c.require(large_n.mean < small_n.mean + slack,
                  std::string(name) + " " + fmt(large_n.mean) + " < " + fmt(small_n.mean) +
                      " (+" + fmt(slack) + ")");
    };
    below(n1000.misspecification, n200.misspecification, "misspecification");
    below(n1000.mse_d, n200.mse_d, "MSE(D)");
    below(n1000.frobenius, n200.frobenius, "Frobenius");
    below(n1000.spectral, n200.spectral, "spectral");
    return out;
}

Outcome criterion3() {
    Outcome out;
    Checker c(out);
    const BenchReport rep = bench_cell(DgpKind::DGP2, 1000, 50, BenchMethod::glasso_ebic, 2);
    c.require(rep.misspecification.mean <= 2.0,
              "misspecification=" + fmt(rep.misspecification.mean) + " <= 2");
    c.require(rep.mse_d.mean <= 0.08, "MSE(D)=" + fmt(rep.mse_d.mean) + " <= 0.08");
    return out;
}

Outcome criterion4() {
    Outcome out;
    Checker c(out);
    const int reps = 200;
    double sum = 0.0, sumsq = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        const MultivariateSeries x = gaussian_noise(1000, 1, 1000 + rep);
        const PeriodogramSet pg = periodogram(x, default_m(1000));
        const double d = estimate_d(pg, 0, -0.49, 0.49);
        sum += d;
        sumsq += d * d;
    }
    const double mean = sum / reps;
    const double rmse = std::sqrt(sumsq / reps);
    c.require(std::abs(mean) <= 0.03, "|mean d_hat|=" + fmt(std::abs(mean)) + " <= 0.03");
    c.require(rmse <= 0.08, "RMSE=" + fmt(rmse) + " <= 0.08");
    return out;
}

Outcome criterion5() {
    Outcome out;
    Checker c(out);
    Eigen::VectorXd d(1);
    d << 0.3;
    const DgpSpec spec = dgp_custom(d, HermitianMatrix::identity(1), false);
    double sum = 0.0;
    const int reps = 100;
    for (int rep = 0; rep < reps; ++rep) {
        const MultivariateSeries x = simulate(spec, 2000, 7000 + rep);
        const PeriodogramSet pg = periodogram(x, default_m(2000));
        sum += estimate_d(pg, 0, -0.49, 0.49);
    }
    const double mean = sum / reps;
    c.require(std::abs(mean - 0.3) <= 0.05, "|mean d_hat - 0.3|=" + fmt(std::abs(mean - 0.3)) +
                                                " <= 0.05 (mean " + fmt(mean) + ")");
    return out;
}

HermitianMatrix random_pd(int p, Philox& rng) {
    Eigen::MatrixXcd a(p, p);
    for (int col = 0; col < p; ++col)
        for (int row = 0; row < p; ++row) {
            const double re = rng.normal();
            const double im = rng.normal();
            a(row, col) = Complex(re, im) / std::sqrt(2.0);
        }
    return hermitian_unchecked(a * a.adjoint() / static_cast<double>(p) +
                               0.5 * Eigen::MatrixXcd::Identity(p, p));
}

Outcome criterion6() {
    Outcome out;
    Checker c(out);
    const auto start = std::chrono::steady_clock::now();
    Philox rng(77, 0);
    AlmConfig cfg;  // constant mu: the decaying schedule stalls below 1e-4 accuracy
    cfg.mu0 = 0.1;
    cfg.mu_floor = 0.099;
    cfg.max_iter = 20000;
    double worst_inverse = 0.0;
    double worst_kkt = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const int p = 2 + static_cast<int>(rng.below(9));
        const HermitianMatrix g = random_pd(p, rng);
        const HermitianMatrix inv = inverse_pd(g);
        const AlmSolution base = alm_solve(g, 0.0, cfg);
        worst_inverse = std::max(
            worst_inverse, (base.p_hat.mat() - inv.mat()).norm() / inv.mat().norm());
        for (double rho : {0.01, 0.1, 0.5}) {
            const AlmSolution sol = alm_solve(g, rho, cfg);
            const HermitianMatrix x_inv = inverse_pd(sol.p_hat);
            for (int r = 0; r < p; ++r)
                for (int s = 0; s < p; ++s) {
                    const Complex grad = g(r, s) - x_inv(r, s);
                    double resid;
                    if (r == s) {
                        resid = std::abs(grad);
                    } else if (std::abs(sol.p_hat(r, s)) > 1e-12) {
                        resid = std::abs(grad + rho * sol.p_hat(r, s) /
                                                    std::abs(sol.p_hat(r, s)));
                    } else {
                        resid = std::max(0.0, std::abs(grad) - rho);
                    }
                    worst_kkt = std::max(worst_kkt, resid);
                }
        }
    }
    const double elapsed = seconds_since(start);
    c.require(worst_inverse <= 1e-4,
              "max rel Frobenius err vs inverse " + fmt(worst_inverse) + " <= 1e-4");
    c.require(worst_kkt <= 10.0 * cfg.tol,
              "max KKT residual " + fmt(worst_kkt) + " <= " + fmt(10.0 * cfg.tol));
    c.require(elapsed <= 60.0, "runtime " + fmt(elapsed) + "s <= 60s");
    return out;
}

Outcome criterion7() {
    Outcome out;
    Checker c(out);
    Philox rng(78, 0);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int p = 1 + static_cast<int>(rng.below(6));
        Eigen::MatrixXcd a(p, p);
        for (int col = 0; col < p; ++col)
            for (int row = 0; row < p; ++row) {
                const double re = rng.normal();
                const double im = rng.normal();
                a(row, col) = Complex(re, im);
            }
        const HermitianMatrix w = hermitian_unchecked(a + a.adjoint().eval());
        const double mu = 0.001 + rng.uniform();
        const Eigen::VectorXd eta = eigh(w).eigenvalues;
        const Eigen::VectorXd gamma = eigh(prox_logdet(w, mu)).eigenvalues;
        for (int i = 0; i < p; ++i)
            worst = std::max(worst,
                             std::abs(gamma[i] * gamma[i] - eta[i] * gamma[i] - mu));
    }
    c.require(worst <= 1e-10, "max |gamma^2 - eta gamma - mu| = " + fmt(worst) + " <= 1e-10");
    return out;
}

Outcome criterion8() {
    Outcome out;
    Checker c(out);
    Philox rng(79, 0);

    double c1_violation = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int p = 2 + static_cast<int>(rng.below(7));
        Eigen::MatrixXcd a(p, p), b(p, p);
        for (int col = 0; col < p; ++col)
            for (int row = 0; row < p; ++row) {
                double re = rng.normal(), im = rng.normal();
                a(row, col) = Complex(re, im);
                re = rng.normal();
                im = rng.normal();
                b(row, col) = Complex(re, im);
            }
        const HermitianMatrix psd = hermitian_unchecked(b * b.adjoint());
        const double lhs = (a * psd.mat() * a.adjoint()).norm();
        const HermitianMatrix gram = hermitian_unchecked(a.adjoint() * a);
        c1_violation =
            std::max(c1_violation, lhs - norms(psd).spectral * norms(gram).frobenius);
        c1_violation =
            std::max(c1_violation, lhs - norms(gram).spectral * norms(psd).frobenius);
    }
    c.require(c1_violation <= 1e-9, "congruence norm bound slack " + fmt(c1_violation));

    double c2_violation = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 1 + static_cast<int>(rng.below(4));
        Eigen::MatrixXcd b(2 * k, 2 * k);
        for (int col = 0; col < 2 * k; ++col)
            for (int row = 0; row < 2 * k; ++row) {
                const double re = rng.normal();
                const double im = rng.normal();
                b(row, col) = Complex(re, im);
            }
        const HermitianMatrix m = hermitian_unchecked(b * b.adjoint());
        const HermitianMatrix aa = hermitian_unchecked(m.mat().topLeftCorner(k, k));
        const HermitianMatrix bb = hermitian_unchecked(m.mat().bottomRightCorner(k, k));
        c2_violation = std::max(
            c2_violation, norms(m).spectral - (norms(aa).spectral + norms(bb).spectral));
        c2_violation = std::max(
            c2_violation, norms(m).frobenius - (norms(aa).frobenius + norms(bb).frobenius));
    }
    c.require(c2_violation <= 1e-9, "block norm bound slack " + fmt(c2_violation));

    double v1_err = 0.0;
    for (std::int64_t m : {2, 3, 10, 100, 1000, 10000}) {
        double grouped = 0.0;
        for (std::int64_t d = 1; d < m; ++d)
            grouped += 2.0 * static_cast<double>(m - d) * static_cast<double>(d) *
                       static_cast<double>(d);
        const double md = static_cast<double>(m);
        v1_err = std::max(v1_err, std::abs(diag::v1(m) - grouped / (3.0 * md * md * md * md)));
    }
    c.require(v1_err <= 1e-14, "V1 closed form vs sum " + fmt(v1_err) + " <= 1e-14");

    const diag::LWeights w = diag::l_weights(100000, 1.0, 0.1, 0.0);
    const double target = 1.0 / (2.0 * std::exp(1.0) * 0.1) - 1.0;
    c.require(std::abs(w.v2 - target) <= 0.1 * target,
              "V2=" + fmt(w.v2) + " within 10% of " + fmt(target));

    bool lemma_b2 = true;
    for (std::int64_t m : {10, 100})
        for (double eta : {0.05, 0.2}) {
            const auto fm = [m](double x) {
                double lhs = 0.0, rhs = 0.0;
                for (std::int64_t j = 1; j <= m; ++j) {
                    lhs += std::pow(static_cast<double>(j), 2.0 * x);
                    rhs += 2.0 * x * std::log(static_cast<double>(j));
                }
                return std::log(lhs / static_cast<double>(m)) - rhs / static_cast<double>(m);
            };
            const double bound = eta * eta * diag::v1(m);
            lemma_b2 = lemma_b2 && fm(eta) >= bound && fm(-eta) >= bound;
        }
    c.require(lemma_b2, "f_m(eta) >= eta^2 V1(m) on the stated grid");
    return out;
}

Outcome criterion9() {
    Outcome out;
    Checker c(out);
    Philox rng(80, 0);
    double parseval_worst = 0.0;
    double rank1_worst = 0.0;
    bool psd = true;
    for (int trial = 0; trial < 500; ++trial) {
        const int p = 1 + static_cast<int>(rng.below(8));
        const std::int64_t n = 8 + 2 * static_cast<std::int64_t>(rng.below(125));
        Eigen::MatrixXd values(n, p);
        for (int col = 0; col < p; ++col)
            for (std::int64_t row = 0; row < n; ++row) values(row, col) = rng.normal();
        const MultivariateSeries x(values);

        const Eigen::MatrixXcd d = dft_full(x.values());
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(p, p);
        for (std::int64_t j = 0; j < n; ++j)
            sum += d.col(j) * d.col(j).adjoint() / (2.0 * M_PI * static_cast<double>(n));
        Eigen::MatrixXcd target = Eigen::MatrixXcd::Zero(p, p);
        for (std::int64_t t = 0; t < n; ++t) {
            const Eigen::VectorXcd row = x.values().row(t).transpose().cast<Complex>();
            target += row * row.adjoint() / (2.0 * M_PI);
        }
        parseval_worst = std::max(parseval_worst, (sum - target).norm() / target.norm());

        const std::int64_t m = std::max<std::int64_t>(1, n / 2 - 1);
        const PeriodogramSet pg = periodogram(x, m);
        for (std::int64_t j = 0; j < pg.m(); ++j) {
            const EigenDecomposition ed = eigh(pg.matrix(j));
            const double top = ed.eigenvalues[p - 1];
            psd = psd && ed.eigenvalues[0] >= -1e-12 * std::max(1.0, top);
            for (int i = 0; i + 1 < p; ++i)
                rank1_worst =
                    std::max(rank1_worst, std::abs(ed.eigenvalues[i]) / std::max(1e-300, top));
        }
    }
    c.require(parseval_worst <= 1e-10,
              "Parseval relative error " + fmt(parseval_worst) + " <= 1e-10");
    c.require(psd && rank1_worst <= 1e-10,
              "rank-1 PSD: trailing eigenvalue ratio " + fmt(rank1_worst) + " <= 1e-10");
    return out;
}

Outcome criterion10() {
    Outcome out;
    Checker c(out);
    const HermitianMatrix g =
        hermitian_unchecked(Eigen::MatrixXcd::Identity(2, 2) / (2.0 * M_PI));
    const DgpSpec spec = dgp_custom(Eigen::VectorXd::Zero(2), g, false);
    const std::int64_t n = 100000;
    const MultivariateSeries x = simulate(spec, n, 41);
    for (int r = 0; r < 2; ++r) {
        const double var = x.values().col(r).squaredNorm() / static_cast<double>(n);
        c.require(std::abs(var - 1.0) <= 0.05,
                  "component " + std::to_string(r + 1) + " variance " + fmt(var));
    }

    Eigen::VectorXd d(1);
    d << 0.3;
    const DgpSpec lrd = dgp_custom(d, HermitianMatrix::identity(1), false);
    const MultivariateSeries y = simulate(lrd, 32768, 42);
    const std::int64_t k = 2000;
    const PeriodogramSet pg = periodogram(y, k);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::int64_t j = 0; j < k; ++j) {
        const double xj = -2.0 * std::log(pg.freqs()[j]);
        const double yj = std::log(pg.rr(j, 0));
        sx += xj;
        sy += yj;
        sxx += xj * xj;
        sxy += xj * yj;
    }
    const double kd = static_cast<double>(k);
    const double slope = (sxy - sx * sy / kd) / (sxx - sx * sx / kd);
    c.require(std::abs(slope - 0.3) <= 0.1, "log-periodogram slope " + fmt(slope) + " ~ 0.3");
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " >/dev/null 2>/dev/null";
    return std::system(cmd.c_str());
}

Outcome criterion11() {
    Outcome out;
    Checker c(out);
    const std::string dir = "/tmp/lrw_acceptance";
    if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) {
        c.require(false, "cannot prepare " + dir);
        return out;
    }

    const auto identical = [&](const std::string& name, const std::string& args,
                               const std::vector<std::string>& artifacts) {
        bool ok = true;
        std::vector<std::string> first;
        for (int round = 0; round < 2; ++round) {
            ok = ok && run_cli(args) == 0;
            for (std::size_t i = 0; i < artifacts.size(); ++i) {
                const std::string content = slurp(artifacts[i]);
                ok = ok && !content.empty();
                if (round == 0)
                    first.push_back(content);
                else
                    ok = ok && content == first[i];
            }
        }
        c.require(ok, name + " byte-identical");
    };

    identical("simulate",
              "simulate --dgp thDGP2 --p 20 --n 256 --seed 7 --out " + dir +
                  "/data.csv --truth-out " + dir + "/truth.json",
              {dir + "/data.csv", dir + "/truth.json"});
    identical("estimate-d", "estimate-d " + dir + "/data.csv --out " + dir + "/fit.json",
              {dir + "/fit.json"});
    identical("estimate-g", "estimate-g " + dir + "/data.csv --out " + dir + "/ghat.json",
              {dir + "/ghat.json"});
    identical("threshold",
              "threshold " + dir + "/data.csv --seed 9 --out " + dir + "/th.json",
              {dir + "/th.json", dir + "/th_cv.csv", dir + "/th_re.csv", dir + "/th_im.csv"});
    identical("glasso",
              "glasso " + dir + "/data.csv --grid-points 8 --out " + dir + "/gl.json",
              {dir + "/gl.json", dir + "/gl_ebic.csv", dir + "/gl_edges.csv"});
    identical("bench",
              "bench --dgp thDGP2 --p 20 --n 200 --reps 3 --method threshold-cv --seed 5 "
              "--threads 2 --out " +
                  dir + "/bench.json --csv-out " + dir + "/bench.csv",
              {dir + "/bench.json", dir + "/bench.csv"});
    identical("dsweep",
              "dsweep " + dir + "/data.csv --m-from 10 --m-count 8 --out " + dir + "/sweep.csv",
              {dir + "/sweep.csv"});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];

    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;
    BenchReport n1000;
    criteria.emplace_back("threshold benchmark cell (thDGP2, p=20, N=1000, R=100)",
                          [&] { return criterion1(n1000); });
    criteria.emplace_back("threshold benchmark monotonicity in N (thDGP2, p=20)",
                          [&] { return criterion2(n1000); });
    criteria.emplace_back("graphical benchmark cell (DGP2, p=20, N=1000, R=50)", criterion3);
    criteria.emplace_back("white-noise d_hat bias and RMSE", criterion4);
    criteria.emplace_back("long-memory recovery (d0=0.3, N=2000)", criterion5);
    criteria.emplace_back("ALM exactness at rho=0 and KKT residuals", criterion6);
    criteria.emplace_back("prox_logdet eigenvalue identity", criterion7);
    criteria.emplace_back("appendix oracle suite (norm bounds, V1, V2, f_m)", criterion8);
    criteria.emplace_back("periodogram Parseval and rank-1 PSD", criterion9);
    criteria.emplace_back("simulator calibration (variance, spectral slope)", criterion10);
    criteria.emplace_back("CLI determinism across runs", criterion11);

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail += std::string("exception: ") + e.what();
        }
        if (!out.pass) ++failures;
        std::printf("%s  criterion %zu: %s  (%s)\n", out.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), out.detail.c_str());
        std::fflush(stdout);
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
