#include "lrw/whittle.hpp"

#include <cmath>

namespace lrw {

namespace {

constexpr int kGridPoints = 201;
constexpr double kRefineTol = 1e-7;

double mean_log_freq(const PeriodogramSet& pg) {
    double s = 0.0;
    for (std::int64_t j = 0; j < pg.m(); ++j) s += std::log(pg.freqs()[j]);
    return s / static_cast<double>(pg.m());
}

/// Objective evaluator with the component's diagonal periodogram cached, so a
/// grid scan reweights rather than recomputing.
class Objective {
public:
    Objective(const PeriodogramSet& pg, int r)
        : loglam_(pg.m()), irr_(pg.m()), mean_loglam_(mean_log_freq(pg)), r_(r) {
        for (std::int64_t j = 0; j < pg.m(); ++j) {
            loglam_[j] = std::log(pg.freqs()[j]);
            irr_[j] = pg.rr(j, r);
        }
    }

    double operator()(double d) const {
        double g = 0.0;
        for (Eigen::Index j = 0; j < loglam_.size(); ++j)
            g += std::exp(2.0 * d * loglam_[j]) * irr_[j];
        g /= static_cast<double>(loglam_.size());
        if (g <= 0.0) throw DegenerateSeries(r_);
        return std::log(g) - 2.0 * d * mean_loglam_;
    }

private:
    Eigen::VectorXd loglam_;
    Eigen::VectorXd irr_;
    double mean_loglam_;
    int r_;
};

}  // namespace

double univariate_objective(const PeriodogramSet& pg, int r, double d) {
    return Objective(pg, r)(d);
}

double estimate_d(const PeriodogramSet& pg, int r, double delta1, double delta2,
                  WhittleFit::PerComponent* info) {
    if (!(delta1 > -0.5 && delta1 < delta2 && delta2 < 0.5))
        throw Error("admissible interval must satisfy -1/2 < delta1 < delta2 < 1/2");
    const Objective obj(pg, r);
    int evals = 0;
    auto eval = [&](double d) {
        ++evals;
        return obj(d);
    };

    const double step = (delta2 - delta1) / (kGridPoints - 1);
    int best_idx = 0;
    double best_val = eval(delta1);
    for (int i = 1; i < kGridPoints; ++i) {
        const double v = eval(delta1 + step * i);
        if (v < best_val) {  // strict: ties keep the smallest d
            best_val = v;
            best_idx = i;
        }
    }

    // Golden-section refinement on the cell bracketing the grid minimum.
    double a = delta1 + step * std::max(best_idx - 1, 0);
    double b = delta1 + step * std::min(best_idx + 1, kGridPoints - 1);
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    while (b - a > kRefineTol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = eval(x2);
        }
    }
    double d_hat = 0.5 * (a + b);
    double v_hat = eval(d_hat);
    // never return a refined point worse than the grid minimum
    if (best_val < v_hat) {
        d_hat = delta1 + step * best_idx;
        v_hat = best_val;
    }
    if (info) {
        info->objective = v_hat;
        info->evaluations = evals;
        info->boundary = d_hat <= delta1 + kRefineTol || d_hat >= delta2 - kRefineTol;
    }
    return d_hat;
}

WhittleFit fit_all(const PeriodogramSet& pg, double delta1, double delta2) {
    WhittleFit fit;
    const int p = pg.p();
    fit.d_hat.d.resize(p);
    fit.d_hat.delta1 = delta1;
    fit.d_hat.delta2 = delta2;
    fit.m = pg.m();
    fit.per_component.resize(p);
    for (int r = 0; r < p; ++r)
        fit.d_hat.d[r] = estimate_d(pg, r, delta1, delta2, &fit.per_component[r]);
    fit.g_hat = ghat(pg, fit.d_hat.d);
    return fit;
}

WhittleFit fit_all(const MultivariateSeries& x, std::int64_t m, double delta1, double delta2) {
    return fit_all(periodogram(x, m), delta1, delta2);
}

double multivariate_objective(const PeriodogramSet& pg, const Eigen::VectorXd& d) {
    const HermitianMatrix g = ghat(pg, d);
    return logdet_pd(g) - 2.0 * d.sum() * mean_log_freq(pg);
}

}  // namespace lrw
