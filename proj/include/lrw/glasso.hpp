#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrw/spectrum.hpp"

namespace lrw {

/// Augmented-Lagrangian schedule and stopping configuration for the ALM
/// solver. mu is cut by mu_factor every mu_period iterations until mu_floor.
struct AlmConfig {
    double mu0 = 0.01;
    int mu_period = 10;
    double mu_factor = 0.25;
    double mu_floor = 1e-3;
    int max_iter = 1000;
    double tol = 1e-5;
};

struct AlmDiagnostics {
    int iterations = 0;
    double primal_residual = 0.0;  // ||X - Y||_F / max(1, ||X||_F)
    double dual_gap = 0.0;         // primal residual / mu; tracks the KKT residual
    double objective = 0.0;
    bool converged = false;
    bool nonconvergence = false;   // max_iter hit with residual above 100 tol
};

struct AlmSolution {
    HermitianMatrix p_hat;
    AlmDiagnostics diagnostics;
};

/// Proximal map of -log det: X = U diag(gamma) U* with
/// gamma_i = (eta_i + sqrt(eta_i^2 + 4 mu)) / 2 from the eigendecomposition
/// of W. Positive definite for every Hermitian W.
HermitianMatrix prox_logdet(const HermitianMatrix& w, double mu);

/// Penalized negative log-likelihood in P at fixed D:
/// -log|P| - 2 (sum_r d_r)(1/m) sum_j log lambda_j + tr(Ghat P) + rho ||P||_{1,off}.
double penalized_objective(const HermitianMatrix& p, const HermitianMatrix& ghat_d, double rho,
                           const Eigen::VectorXd& d, const Eigen::VectorXd& freqs);

/// Alternating linearization solver for
///   argmin_{P > 0} -log|P| + tr(Ghat P) + rho ||P||_{1,off}.
/// Returns the sparse iterate Y with its diagonal taken from X. An optional
/// warm start seeds Y directly; the cold start uses diag(Ghat^{-1}).
AlmSolution alm_solve(const HermitianMatrix& ghat_d, double rho, const AlmConfig& cfg = {},
                      const std::optional<HermitianMatrix>& warm_start = std::nullopt);

/// Extended BIC: tr(Ghat P) - log|P| + ||P||_0 (log N + 4 gamma log p) / N,
/// where ||P||_0 counts entries with modulus above 1e-12 over the full matrix.
double ebic(const HermitianMatrix& p, const HermitianMatrix& ghat_d, std::int64_t n, double gamma);

struct GlassoPath {
    std::vector<double> rhos;  // descending
    std::vector<HermitianMatrix> estimates;
    std::vector<double> ebic_values;
    std::vector<int> nnz;
    std::size_t selected = 0;  // eBIC minimizer; ties resolve to the largest rho
    std::vector<std::string> warnings;
};

/// Solve over a rho grid (default: 50 log-spaced values from the largest
/// off-diagonal modulus of Ghat down by 1e-3), warm-starting each solve from
/// the previous solution, sparsest first, and select by eBIC.
GlassoPath glasso_path(const HermitianMatrix& ghat_d, std::int64_t n, double gamma,
                       std::vector<double> grid = {}, const AlmConfig& cfg = {},
                       int grid_points = 50);

}  // namespace lrw
