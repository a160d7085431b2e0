#pragma once

#include <vector>

#include "lrw/spectrum.hpp"

namespace lrw {

/// Result of the two-stage local Whittle fit: memory parameters estimated
/// univariately, long-run variance matrix from the reweighted periodogram.
struct WhittleFit {
    MemoryParams d_hat;
    HermitianMatrix g_hat;
    std::int64_t m = 0;
    struct PerComponent {
        double objective = 0.0;  // R_r at the optimum
        int evaluations = 0;
        bool boundary = false;   // optimum on an admissible-interval endpoint
    };
    std::vector<PerComponent> per_component;
};

/// Profiled univariate objective R_r(d) = log ghat_r(d) - 2 d (1/m) sum log lambda_j.
/// Throws DegenerateSeries when ghat_r(d) = 0.
double univariate_objective(const PeriodogramSet& pg, int r, double d);

/// argmin of R_r over [delta1, delta2]: 201-point grid scan (ties resolved to
/// the smallest d) followed by golden-section refinement of the bracketing
/// cell. `evaluations` and `boundary` reported when out-params are given.
double estimate_d(const PeriodogramSet& pg, int r, double delta1, double delta2,
                  WhittleFit::PerComponent* info = nullptr);

/// Per-component estimate_d plus Ghat(Dhat).
WhittleFit fit_all(const MultivariateSeries& x, std::int64_t m, double delta1, double delta2);

/// Same, reusing an existing periodogram.
WhittleFit fit_all(const PeriodogramSet& pg, double delta1, double delta2);

/// Concentrated multivariate objective
/// R(D) = log|Ghat(D)| - 2 (sum_r d_r) (1/m) sum_j log lambda_j.
double multivariate_objective(const PeriodogramSet& pg, const Eigen::VectorXd& d);

}  // namespace lrw
