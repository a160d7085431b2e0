#include "lrw/spectrum.hpp"

#include <cmath>
#include <vector>

#include "lrw/fft.hpp"

namespace lrw {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

using detail::fft_r2c;

}  // namespace

PeriodogramSet::PeriodogramSet(std::int64_t n, Eigen::VectorXd freqs, Eigen::MatrixXcd dft)
    : n_(n), freqs_(std::move(freqs)), dft_(std::move(dft)) {
    if (freqs_.size() != dft_.cols())
        throw Error("frequency count does not match DFT column count");
    if (freqs_.size() < 1) throw InvalidFrequencyCount("need at least one frequency");
}

HermitianMatrix PeriodogramSet::matrix(std::int64_t j) const {
    const Eigen::VectorXcd col = dft_.col(j);
    return hermitian_unchecked((col * col.adjoint()) / (kTwoPi * static_cast<double>(n_)));
}

double PeriodogramSet::rr(std::int64_t j, int r) const {
    return std::norm(dft_(r, j)) / (kTwoPi * static_cast<double>(n_));
}

Eigen::VectorXd fourier_frequencies(std::int64_t n, std::int64_t m) {
    const std::int64_t limit = n / 2 - 1;
    if (m < 1 || m > limit)
        throw InvalidFrequencyCount("m = " + std::to_string(m) + " outside [1, " +
                                    std::to_string(limit) + "] for N = " + std::to_string(n));
    Eigen::VectorXd freqs(m);
    for (std::int64_t j = 1; j <= m; ++j)
        freqs[j - 1] = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    return freqs;
}

std::int64_t default_m(std::int64_t n) {
    const auto raw = static_cast<std::int64_t>(std::floor(std::pow(static_cast<double>(n), 0.8)));
    const std::int64_t hi = std::max<std::int64_t>(n / 2 - 1, 1);
    return std::min(std::max<std::int64_t>(raw, 1), hi);
}

Eigen::MatrixXcd dft_full(const Eigen::MatrixXd& values) {
    const std::int64_t n = values.rows();
    const int p = static_cast<int>(values.cols());
    Eigen::MatrixXcd out(p, n);
    for (int r = 0; r < p; ++r) {
        const std::vector<Complex> y = fft_r2c(values.col(r).data(), n);
        for (std::int64_t j = 0; j < n; ++j) {
            // d(lambda_j) = e^{i lambda_j} conj(Y_j) with Y the engineering-sign
            // DFT of (X_1..X_N); real input gives Y_j = conj(Y_{N-j}).
            const double lambda = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
            const Complex yj = j <= n / 2 ? std::conj(y[static_cast<std::size_t>(j)])
                                          : y[static_cast<std::size_t>(n - j)];
            out(r, j) = std::polar(1.0, lambda) * yj;
        }
    }
    return out;
}

PeriodogramSet periodogram(const MultivariateSeries& x, std::int64_t m) {
    Eigen::VectorXd freqs = fourier_frequencies(x.n(), m);
    const std::int64_t n = x.n();
    const int p = x.p();
    Eigen::MatrixXcd dft(p, m);
    for (int r = 0; r < p; ++r) {
        const std::vector<Complex> y = fft_r2c(x.values().col(r).data(), n);
        for (std::int64_t j = 1; j <= m; ++j)
            dft(r, j - 1) = std::polar(1.0, freqs[j - 1]) * std::conj(y[static_cast<std::size_t>(j)]);
    }
    return PeriodogramSet(n, std::move(freqs), std::move(dft));
}

HermitianMatrix ghat(const PeriodogramSet& pg, const Eigen::VectorXd& d) {
    const int p = pg.p();
    if (d.size() != p) throw Error("memory parameter vector length does not match dimension");
    const std::int64_t m = pg.m();
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(p, p);
    const double norm = 1.0 / (static_cast<double>(m) * kTwoPi * static_cast<double>(pg.n()));
    Eigen::VectorXcd w(p);
    for (std::int64_t j = 0; j < m; ++j) {
        const double loglam = std::log(pg.freqs()[j]);
        for (int r = 0; r < p; ++r) w[r] = pg.dft()(r, j) * std::exp(d[r] * loglam);
        acc.selfadjointView<Eigen::Lower>().rankUpdate(w, norm);
    }
    Eigen::MatrixXcd full = acc.selfadjointView<Eigen::Lower>();
    return hermitian_unchecked(std::move(full));
}

double ghat_scalar(const PeriodogramSet& pg, int r, double d) {
    const std::int64_t m = pg.m();
    double acc = 0.0;
    for (std::int64_t j = 0; j < m; ++j)
        acc += std::exp(2.0 * d * std::log(pg.freqs()[j])) * pg.rr(j, r);
    return acc / static_cast<double>(m);
}

}  // namespace lrw
