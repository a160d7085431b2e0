#include "lrw/glasso.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace lrw {

namespace {

double offdiag_l1(const Eigen::MatrixXcd& m) {
    double acc = 0.0;
    for (Eigen::Index s = 0; s < m.cols(); ++s)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (r != s) acc += std::abs(m(r, s));
    return acc;
}

double real_trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    // tr(AB) for Hermitian A, B is real; the imaginary residue is rounding.
    const Complex tr = (a * b).trace();
    assert(std::abs(tr.imag()) <= 1e-10 * std::max(1.0, std::abs(tr.real())));
    return tr.real();
}

Eigen::MatrixXcd spectral_apply(const EigenDecomposition& ed, const Eigen::VectorXd& vals) {
    return ed.eigenvectors * vals.asDiagonal() * ed.eigenvectors.adjoint();
}

}  // namespace

HermitianMatrix prox_logdet(const HermitianMatrix& w, double mu) {
    if (mu <= 0.0) throw Error("prox_logdet needs mu > 0");
    const EigenDecomposition ed = eigh(w);
    Eigen::VectorXd gamma(ed.eigenvalues.size());
    for (Eigen::Index i = 0; i < gamma.size(); ++i) {
        const double eta = ed.eigenvalues[i];
        gamma[i] = 0.5 * (eta + std::sqrt(eta * eta + 4.0 * mu));
    }
    return hermitian_unchecked(spectral_apply(ed, gamma));
}

double penalized_objective(const HermitianMatrix& p, const HermitianMatrix& ghat_d, double rho,
                           const Eigen::VectorXd& d, const Eigen::VectorXd& freqs) {
    const double logdet = logdet_pd(p);
    double mean_loglam = 0.0;
    for (Eigen::Index j = 0; j < freqs.size(); ++j) mean_loglam += std::log(freqs[j]);
    mean_loglam /= static_cast<double>(freqs.size());
    return -logdet - 2.0 * d.sum() * mean_loglam + real_trace_product(ghat_d.mat(), p.mat()) +
           rho * offdiag_l1(p.mat());
}

AlmSolution alm_solve(const HermitianMatrix& ghat_d, double rho, const AlmConfig& cfg,
                      const std::optional<HermitianMatrix>& warm_start) {
    if (rho < 0.0) throw Error("penalty must be nonnegative");
    if (!(cfg.mu0 > cfg.mu_floor && cfg.mu_floor > 0.0))
        throw Error("schedule needs mu0 > mu_floor > 0");
    if (!(cfg.mu_factor > 0.0 && cfg.mu_factor < 1.0))
        throw Error("schedule needs 0 < mu_factor < 1");
    const int p = ghat_d.dim();
    const Eigen::MatrixXcd& g = ghat_d.mat();

    if (rho == 0.0 && eigh(ghat_d).eigenvalues.minCoeff() <= 0.0)
        throw NotPositiveDefinite(
            "Ghat is singular and rho = 0; the unpenalized problem has no minimizer");

    Eigen::MatrixXcd y;
    if (warm_start) {
        if (warm_start->dim() != p) throw Error("warm start dimension mismatch");
        y = warm_start->mat();
    } else {
        // Y^0 = diag(Ptilde) with Ptilde = Ghat^{-1}, regularized when Ghat is
        // singular or has condition number above 1e12.
        const EigenDecomposition ge = eigh(ghat_d);
        const double ev_min = ge.eigenvalues.minCoeff();
        const double ev_max = ge.eigenvalues.maxCoeff();
        double eps = 0.0;
        if (ev_min <= 0.0 || ev_max > 1e12 * ev_min)
            eps = 1e-6 * ge.eigenvalues.sum() / static_cast<double>(p);
        Eigen::VectorXd inv_vals(p);
        for (int i = 0; i < p; ++i) inv_vals[i] = 1.0 / (ge.eigenvalues[i] + eps);
        const Eigen::MatrixXcd p_init = spectral_apply(ge, inv_vals);
        y = p_init.diagonal().asDiagonal();
    }

    Eigen::MatrixXcd lambda = Eigen::MatrixXcd::Zero(p, p);
    Eigen::MatrixXcd x = y;
    Eigen::MatrixXcd x_inv;
    double mu = cfg.mu0;
    double prev_obj = std::numeric_limits<double>::infinity();
    AlmSolution out;
    AlmDiagnostics& diag = out.diagnostics;
    for (int k = 0; k < cfg.max_iter; ++k) {
        if (k > 0 && k % cfg.mu_period == 0) mu = std::max(mu * cfg.mu_factor, cfg.mu_floor);

        const Eigen::MatrixXcd w = y + mu * (lambda - g);
        const EigenDecomposition ed = eigh(hermitian_unchecked(w));
        Eigen::VectorXd gamma(p), gamma_inv(p);
        double logdet_x = 0.0;
        for (int i = 0; i < p; ++i) {
            const double eta = ed.eigenvalues[i];
            gamma[i] = 0.5 * (eta + std::sqrt(eta * eta + 4.0 * mu));
            assert(gamma[i] > 0.0);  // X stays positive definite
            gamma_inv[i] = 1.0 / gamma[i];
            logdet_x += std::log(gamma[i]);
        }
        x = spectral_apply(ed, gamma);
        x_inv = spectral_apply(ed, gamma_inv);

        const HermitianMatrix y_arg = hermitian_unchecked(x - mu * (g - x_inv));
        y = soft_threshold_offdiag(y_arg, mu * rho).mat();
        // Multiplier carried into the next X-step: the negated subgradient of
        // the penalty delivered by the Y-step, G - X^{-1} + (Y - X)/mu. (With
        // (X - Y)/mu instead, the W update collapses to X - mu X^{-1} and the
        // iteration never leaves its starting point.)
        lambda = g - x_inv + (y - x) / mu;

        const double obj = -logdet_x + real_trace_product(g, x) + rho * offdiag_l1(y);
        const double primal = (x - y).norm() / std::max(1.0, x.norm());
        // The Y-step optimality puts the KKT residual at (X - Y)/mu entrywise,
        // so the primal gap alone certifies only mu-scaled accuracy.
        const double dual = primal / mu;
        const double obj_change = std::abs(obj - prev_obj) / std::max(1.0, std::abs(obj));
        prev_obj = obj;
        diag.iterations = k + 1;
        diag.primal_residual = primal;
        diag.dual_gap = dual;
        diag.objective = obj;
        if (std::max({primal, dual, obj_change}) < cfg.tol) {
            diag.converged = true;
            break;
        }
    }
    if (!diag.converged && diag.primal_residual > 100.0 * cfg.tol) diag.nonconvergence = true;

    Eigen::MatrixXcd result = y;
    result.diagonal() = x.diagonal();
    out.p_hat = hermitian_unchecked(std::move(result));
    return out;
}

double ebic(const HermitianMatrix& p, const HermitianMatrix& ghat_d, std::int64_t n, double gamma) {
    const double logdet = logdet_pd(p);  // throws NotPositiveDefinite
    const int dim = p.dim();
    int nnz = 0;
    for (int s = 0; s < dim; ++s)
        for (int r = 0; r < dim; ++r)
            if (std::abs(p(r, s)) > 1e-12) ++nnz;
    const double penalty = static_cast<double>(nnz) *
                           (std::log(static_cast<double>(n)) + 4.0 * gamma * std::log(dim)) /
                           static_cast<double>(n);
    return real_trace_product(ghat_d.mat(), p.mat()) - logdet + penalty;
}

GlassoPath glasso_path(const HermitianMatrix& ghat_d, std::int64_t n, double gamma,
                       std::vector<double> grid, const AlmConfig& cfg, int grid_points) {
    if (grid.empty()) {
        double rho_max = 0.0;
        const int p = ghat_d.dim();
        for (int s = 0; s < p; ++s)
            for (int r = 0; r < p; ++r)
                if (r != s) rho_max = std::max(rho_max, std::abs(ghat_d(r, s)));
        if (rho_max <= 0.0) {
            grid = {0.0};
        } else {
            grid.resize(static_cast<std::size_t>(std::max(grid_points, 2)));
            const double lo = std::log(1e-3 * rho_max);
            const double hi = std::log(rho_max);
            const auto k = static_cast<double>(grid.size() - 1);
            for (std::size_t i = 0; i < grid.size(); ++i)
                grid[i] = std::exp(hi + (lo - hi) * static_cast<double>(i) / k);
        }
    }
    std::sort(grid.begin(), grid.end(), std::greater<>());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    GlassoPath path;
    path.rhos = grid;
    path.estimates.reserve(grid.size());
    path.ebic_values.reserve(grid.size());
    path.nnz.reserve(grid.size());
    std::optional<HermitianMatrix> warm;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        AlmSolution sol = alm_solve(ghat_d, grid[i], cfg, warm);
        if (sol.diagnostics.nonconvergence)
            path.warnings.push_back("rho = " + std::to_string(grid[i]) +
                                    ": ALM hit max_iter with residual " +
                                    std::to_string(sol.diagnostics.primal_residual));
        warm = sol.p_hat;
        double value;
        try {
            value = ebic(sol.p_hat, ghat_d, n, gamma);
        } catch (const NotPositiveDefinite&) {
            value = std::numeric_limits<double>::infinity();
            path.warnings.push_back("rho = " + std::to_string(grid[i]) +
                                    ": estimate not PD; excluded from eBIC selection");
        }
        int count = 0;
        for (int s = 0; s < sol.p_hat.dim(); ++s)
            for (int r = 0; r < sol.p_hat.dim(); ++r)
                if (std::abs(sol.p_hat(r, s)) > 1e-12) ++count;
        path.estimates.push_back(std::move(sol.p_hat));
        path.ebic_values.push_back(value);
        path.nnz.push_back(count);
    }
    path.selected = 0;
    for (std::size_t i = 1; i < path.ebic_values.size(); ++i)
        if (path.ebic_values[i] < path.ebic_values[path.selected]) path.selected = i;
    return path;
}

}  // namespace lrw
