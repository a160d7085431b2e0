#include "lrw/shrinkage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace lrw {

HermitianMatrix hard_threshold(const HermitianMatrix& g, double rho, bool preserve_diagonal) {
    if (rho < 0.0) throw Error("threshold must be nonnegative");
    Eigen::MatrixXcd out = g.mat();
    const int p = g.dim();
    for (int s = 0; s < p; ++s)
        for (int r = 0; r < p; ++r) {
            if (preserve_diagonal && r == s) continue;
            if (std::abs(out(r, s)) < rho) out(r, s) = Complex(0.0, 0.0);
        }
    return hermitian_unchecked(std::move(out));
}

std::vector<double> default_rho_grid(const HermitianMatrix& g, int points) {
    if (points < 2) throw Error("grid needs at least 2 points");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    const int p = g.dim();
    for (int s = 0; s < p; ++s)
        for (int r = 0; r < p; ++r) {
            const double mag = std::abs(g(r, s));
            if (mag > 0.0) lo = std::min(lo, mag);
            hi = std::max(hi, mag);
        }
    if (hi == 0.0) throw DegenerateGrid("matrix is identically zero; no threshold grid");
    if (lo == hi) return {lo};
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    return grid;
}

ThresholdResult cv_threshold(const PeriodogramSet& pg, const MemoryParams& d_hat,
                             const std::vector<double>& grid, int n1, std::uint64_t seed,
                             bool preserve_diagonal) {
    if (pg.m() < 2) throw Error("cross-validation needs m >= 2 frequencies");
    if (n1 < 1) throw Error("need at least one validation split");
    if (grid.empty()) throw Error("threshold grid is empty");
    const int p = pg.p();
    const auto m = static_cast<std::size_t>(pg.m());

    // lambda_j^D-weighted DFT columns; Ghat over an index set is a rank-1 sum.
    Eigen::MatrixXcd w(p, static_cast<Eigen::Index>(m));
    const double scale = 1.0 / std::sqrt(2.0 * M_PI * static_cast<double>(pg.n()));
    for (std::size_t j = 0; j < m; ++j) {
        const double loglam = std::log(pg.freqs()[static_cast<Eigen::Index>(j)]);
        for (int r = 0; r < p; ++r)
            w(r, static_cast<Eigen::Index>(j)) =
                pg.dft()(r, static_cast<Eigen::Index>(j)) * std::exp(d_hat.d[r] * loglam) * scale;
    }
    const auto half_sum = [&](const std::vector<std::size_t>& idx, std::size_t lo,
                              std::size_t hi) {
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(p, p);
        for (std::size_t i = lo; i < hi; ++i)
            acc.selfadjointView<Eigen::Lower>().rankUpdate(
                w.col(static_cast<Eigen::Index>(idx[i])), 1.0 / static_cast<double>(hi - lo));
        Eigen::MatrixXcd full = acc.selfadjointView<Eigen::Lower>();
        return hermitian_unchecked(std::move(full));
    };

    std::vector<double> risk(grid.size(), 0.0);
    std::vector<std::size_t> idx(m);
    for (int k = 0; k < n1; ++k) {
        Philox rng(seed, derive_stream(0x6376u /*"cv"*/, static_cast<std::uint64_t>(k)));
        std::iota(idx.begin(), idx.end(), 0);
        rng.shuffle(idx);
        const std::size_t m1 = m / 2;
        const HermitianMatrix g1 = half_sum(idx, 0, m1);
        const HermitianMatrix g2 = half_sum(idx, m1, m);
        for (std::size_t g = 0; g < grid.size(); ++g) {
            const HermitianMatrix t = hard_threshold(g1, grid[g], preserve_diagonal);
            risk[g] += (t.mat() - g2.mat()).squaredNorm() / static_cast<double>(n1);
        }
    }

    ThresholdResult out;
    out.splits_used = n1;
    std::size_t best = 0;
    for (std::size_t g = 1; g < grid.size(); ++g) {
        const bool better = risk[g] < risk[best] ||
                            (risk[g] == risk[best] && grid[g] < grid[best]);
        if (better) best = g;
    }
    out.rho_hat = grid[best];
    out.cv_curve.reserve(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) out.cv_curve.emplace_back(grid[g], risk[g]);
    out.g_thresholded = hard_threshold(ghat(pg, d_hat.d), out.rho_hat, preserve_diagonal);
    return out;
}

SparsityMetrics metrics(const HermitianMatrix& est, const HermitianMatrix& truth,
                        const Eigen::VectorXd& est_d, const Eigen::VectorXd& true_d,
                        double zero_tol) {
    if (est.dim() != truth.dim()) throw Error("metric matrices must share dimensions");
    if (est_d.size() != true_d.size()) throw Error("memory vectors must share lengths");
    SparsityMetrics out;
    const int p = est.dim();
    int miss = 0;
    for (int r = 0; r < p; ++r)
        for (int s = 0; s <= r; ++s) {
            const bool est_zero = std::abs(est(r, s)) <= zero_tol;
            const bool true_zero = truth(r, s) == Complex(0.0, 0.0);
            if (est_zero != true_zero) ++miss;
        }
    out.misspecification = miss;
    out.mse_d = (est_d - true_d).squaredNorm() / static_cast<double>(est_d.size());
    const HermitianMatrix diff = hermitian_unchecked(est.mat() - truth.mat());
    const Norms nn = norms(diff);
    out.frobenius_err = nn.frobenius;
    out.spectral_err = nn.spectral;
    return out;
}

}  // namespace lrw
