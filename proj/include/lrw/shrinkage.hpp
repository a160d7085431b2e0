#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lrw/rng.hpp"
#include "lrw/spectrum.hpp"

namespace lrw {

/// Entrywise hard threshold: entries with modulus < rho become zero, all
/// others are kept exactly. Applied to the diagonal too unless
/// preserve_diagonal is set.
HermitianMatrix hard_threshold(const HermitianMatrix& g, double rho,
                               bool preserve_diagonal = false);

/// Uniform grid between the smallest nonzero and the largest entry modulus of
/// g, inclusive. Collapses to a single point when they coincide; throws
/// DegenerateGrid for an all-zero matrix.
std::vector<double> default_rho_grid(const HermitianMatrix& g, int points);

struct ThresholdResult {
    double rho_hat = 0.0;
    HermitianMatrix g_thresholded;
    std::vector<std::pair<double, double>> cv_curve;  // (rho, risk), grid order
    int splits_used = 0;
};

/// Threshold selection by cross-validation over the periodogram: N1 random
/// half splits of the frequencies, Ghat from each half, risk of T_rho applied
/// to the first half against the second. Splits are drawn once per k from a
/// seed-derived substream and shared across the whole rho grid, so the argmin
/// is invariant to grid order (ties resolve to the smallest rho).
ThresholdResult cv_threshold(const PeriodogramSet& pg, const MemoryParams& d_hat,
                             const std::vector<double>& grid, int n1, std::uint64_t seed,
                             bool preserve_diagonal = false);

struct SparsityMetrics {
    double misspecification = 0.0;  // zero-pattern disagreements, r >= s
    double mse_d = 0.0;
    double frobenius_err = 0.0;
    double spectral_err = 0.0;
};

/// Performance measures of an estimate against the truth. zero_tol is the
/// modulus below which an *estimated* entry counts as zero (0 for hard
/// thresholding, which produces exact zeros; 1e-12 for ALM output).
SparsityMetrics metrics(const HermitianMatrix& est, const HermitianMatrix& truth,
                        const Eigen::VectorXd& est_d, const Eigen::VectorXd& true_d,
                        double zero_tol = 0.0);

}  // namespace lrw
