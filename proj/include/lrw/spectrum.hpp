#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "lrw/hermitian.hpp"
#include "lrw/series.hpp"

namespace lrw {

/// Memory parameters d_1..d_p together with the admissible interval they were
/// estimated over.
struct MemoryParams {
    Eigen::VectorXd d;
    double delta1 = -0.49;
    double delta2 = 0.49;
};

/// The DFT column d(lambda_j) = sum_n X_n e^{i n lambda_j} for j = 1..m and
/// the periodogram matrices I(lambda_j) = d d* / (2 pi N) derived from it.
/// Each I(lambda_j) is Hermitian PSD of rank <= 1 by construction.
class PeriodogramSet {
public:
    /// Value-level constructor from precomputed DFT columns (p x m) and
    /// their frequencies. Factories below enforce the m <= floor(N/2)-1 gate.
    PeriodogramSet(std::int64_t n, Eigen::VectorXd freqs, Eigen::MatrixXcd dft);

    std::int64_t n() const { return n_; }
    std::int64_t m() const { return freqs_.size(); }
    int p() const { return static_cast<int>(dft_.rows()); }
    const Eigen::VectorXd& freqs() const { return freqs_; }
    const Eigen::MatrixXcd& dft() const { return dft_; }

    /// Materialize I(lambda_j).
    HermitianMatrix matrix(std::int64_t j) const;

    /// Diagonal entry I_rr(lambda_j).
    double rr(std::int64_t j, int r) const;

private:
    std::int64_t n_;
    Eigen::VectorXd freqs_;
    Eigen::MatrixXcd dft_;  // p x m, column j holds d(lambda_j)
};

/// Fourier frequencies 2 pi j / N for j = 1..m.
/// Throws InvalidFrequencyCount unless 1 <= m <= floor(N/2)-1.
Eigen::VectorXd fourier_frequencies(std::int64_t n, std::int64_t m);

/// Bandwidth rule floor(N^0.8), clamped to the valid range of m.
std::int64_t default_m(std::int64_t n);

/// Periodogram at the first m Fourier frequencies, via one full-grid FFT per
/// component.
PeriodogramSet periodogram(const MultivariateSeries& x, std::int64_t m);

/// d(lambda_j) for the whole grid j = 0..N-1 (p x N). Exposed for identity
/// checks that need frequencies beyond the estimation band.
Eigen::MatrixXcd dft_full(const Eigen::MatrixXd& values);

/// Ghat(D) = (1/m) sum_j lambda_j^D I(lambda_j) lambda_j^D. Hermitian PSD.
HermitianMatrix ghat(const PeriodogramSet& pg, const Eigen::VectorXd& d);

/// Univariate weighted average ghat_r(d) = (1/m) sum_j lambda_j^{2d} I_rr(lambda_j).
double ghat_scalar(const PeriodogramSet& pg, int r, double d);

}  // namespace lrw
