#include "lrw/synthdgp.hpp"

#include <Eigen/Cholesky>
#include <cassert>
#include <cmath>
#include <vector>

#include "lrw/fft.hpp"
#include "lrw/rng.hpp"

namespace lrw {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Built-in 20 x 20 block designs; set() takes 1-based indices and mirrors
// the entry onto the conjugate position.
Eigen::MatrixXcd base_block(DgpKind kind) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(20, 20);
    auto set = [&](int r, int s, Complex z) {
        b(r - 1, s - 1) = z;
        b(s - 1, r - 1) = std::conj(z);
    };
    switch (kind) {
        case DgpKind::thDGP1:
            b.diagonal().setConstant(0.159);
            b(0, 0) = b(5, 5) = 0.312;
            b(10, 10) = b(13, 13) = 0.212;
            b(2, 2) = b(19, 19) = 0.189;
            set(1, 6, {-0.208, -0.064});
            set(3, 20, {-0.074, 0.015});
            set(11, 14, {-0.105, -0.013});
            break;
        case DgpKind::thDGP2:
            b.diagonal().setOnes();
            set(3, 9, {0.5, 0.2});
            set(5, 14, {0.4, 0.2});
            break;
        case DgpKind::thDGP3:
            b.diagonal().setOnes();
            for (int r = 1; r <= 19; ++r) set(r, r + 1, {0.4, 0.2});
            break;
        case DgpKind::DGP1:
            b.diagonal().setConstant(6.28);
            set(1, 6, {4.20, 1.29});
            set(3, 20, {2.46, -0.51});
            set(11, 14, {3.12, 0.39});
            break;
        case DgpKind::DGP2:
            b.diagonal().setOnes();
            set(3, 9, {0.5, 0.2});
            set(5, 14, {0.4, 0.2});
            break;
        case DgpKind::DGP3:
            b.diagonal().setOnes();
            for (int r = 1; r <= 19; ++r) set(r, r + 1, {0.2, 0.1});
            break;
        case DgpKind::custom:
            throw Error("custom kind has no preset block");
    }
    return b;
}

bool preset_is_precision(DgpKind kind) {
    return kind == DgpKind::DGP1 || kind == DgpKind::DGP2 || kind == DgpKind::DGP3;
}

Eigen::MatrixXcd kronecker_blocks(const Eigen::MatrixXcd& block, int copies) {
    const auto b = static_cast<int>(block.rows());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(b * copies, b * copies);
    for (int k = 0; k < copies; ++k) out.block(k * b, k * b, b, b) = block;
    return out;
}

void c2c_forward(std::vector<Complex>& data) { data = detail::fft_c2c_forward(data); }

}  // namespace

DgpKind dgp_kind_from_string(const std::string& name) {
    if (name == "thDGP1") return DgpKind::thDGP1;
    if (name == "thDGP2") return DgpKind::thDGP2;
    if (name == "thDGP3") return DgpKind::thDGP3;
    if (name == "DGP1") return DgpKind::DGP1;
    if (name == "DGP2") return DgpKind::DGP2;
    if (name == "DGP3") return DgpKind::DGP3;
    if (name == "custom") return DgpKind::custom;
    throw Error("unknown DGP kind \"" + name + "\"");
}

std::string dgp_kind_to_string(DgpKind kind) {
    switch (kind) {
        case DgpKind::thDGP1: return "thDGP1";
        case DgpKind::thDGP2: return "thDGP2";
        case DgpKind::thDGP3: return "thDGP3";
        case DgpKind::DGP1: return "DGP1";
        case DgpKind::DGP2: return "DGP2";
        case DgpKind::DGP3: return "DGP3";
        case DgpKind::custom: return "custom";
    }
    return "custom";
}

DgpSpec dgp_preset(DgpKind kind, int p, std::uint64_t seed) {
    if (kind == DgpKind::custom) throw Error("use dgp_custom for custom specs");
    if (p < 20 || p % 20 != 0)
        throw InvalidDimension("preset dimension must be a positive multiple of 20, got " +
                               std::to_string(p));
    const Eigen::MatrixXcd full = kronecker_blocks(base_block(kind), p / 20);
    DgpSpec spec;
    spec.kind = kind;
    spec.p = p;
    if (preset_is_precision(kind)) {
        spec.p0 = HermitianMatrix(full);
        spec.g0 = inverse_pd(spec.p0);
    } else {
        spec.g0 = HermitianMatrix(full);
        spec.p0 = inverse_pd(spec.g0);
    }
    spec.d0.resize(p);
    Philox rng(seed, derive_stream(0xD0u, 0));
    for (int r = 0; r < p; ++r) spec.d0[r] = 0.1 + 0.35 * rng.uniform();
    return spec;
}

DgpSpec dgp_custom(Eigen::VectorXd d0, const HermitianMatrix& matrix, bool matrix_is_precision) {
    DgpSpec spec;
    spec.kind = DgpKind::custom;
    spec.p = matrix.dim();
    if (d0.size() != spec.p) throw Error("memory vector length does not match matrix dimension");
    for (Eigen::Index r = 0; r < d0.size(); ++r)
        if (!(d0[r] > -0.5 && d0[r] < 0.5))
            throw Error("memory parameters must lie in (-1/2, 1/2)");
    spec.d0 = std::move(d0);
    if (matrix_is_precision) {
        spec.p0 = matrix;
        spec.g0 = inverse_pd(matrix);
    } else {
        spec.g0 = matrix;
        spec.p0 = inverse_pd(matrix);
    }
    return spec;
}

MultivariateSeries simulate(const DgpSpec& spec, std::int64_t n, std::uint64_t seed) {
    if (n < 8 || n % 2 != 0) throw Error("simulation needs even N >= 8");
    const int p = spec.p;

    Eigen::LLT<Eigen::MatrixXcd> llt(spec.g0.mat());
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("G0 must be positive definite to simulate");
    const Eigen::MatrixXcd chol = llt.matrixL();
    // Nyquist draw is real with covariance Re f(pi) = pi^{-D} Re(G0) pi^{-D}.
    Eigen::LLT<Eigen::MatrixXd> llt_re(spec.g0.mat().real());
    if (llt_re.info() != Eigen::Success)
        throw NotPositiveDefinite("Re(G0) must be positive definite to simulate");
    const Eigen::MatrixXd chol_re = llt_re.matrixL();

    // Frequency-domain coefficients, column j = Z_j; Z_{N-j} = conj(Z_j).
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(p, n);
    Philox rng(seed, derive_stream(0x51u, 0));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Eigen::VectorXcd xi(p);
    for (std::int64_t j = 1; j < n / 2; ++j) {
        const double lambda = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
        for (int r = 0; r < p; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            xi[r] = Complex(re, im) * inv_sqrt2;
        }
        Eigen::VectorXcd zj = chol * xi;
        for (int r = 0; r < p; ++r)
            zj[r] *= std::exp(-spec.d0[r] * std::log(lambda));
        z.col(j) = zj;
        z.col(n - j) = zj.conjugate();
    }
    {
        Eigen::VectorXd eta(p);
        for (int r = 0; r < p; ++r) eta[r] = rng.normal();
        Eigen::VectorXd znyq = chol_re * eta;
        for (int r = 0; r < p; ++r)
            znyq[r] *= std::exp(-spec.d0[r] * std::log(M_PI));
        z.col(n / 2) = znyq.cast<Complex>();
    }

    const double scale = std::sqrt(kTwoPi / static_cast<double>(n));
    Eigen::MatrixXd values(n, p);
    std::vector<Complex> buf(static_cast<std::size_t>(n));
    for (int r = 0; r < p; ++r) {
        for (std::int64_t j = 0; j < n; ++j) buf[static_cast<std::size_t>(j)] = z(r, j);
        c2c_forward(buf);  // W_t = sum_j Z_j e^{-i t lambda_j}, real by symmetry
#ifndef NDEBUG
        double max_mag = 0.0;
        for (const Complex& w : buf) max_mag = std::max(max_mag, std::abs(w));
        for (const Complex& w : buf)
            assert(std::abs(w.imag()) <= 1e-10 * std::max(1.0, max_mag));
#endif
        for (std::int64_t t = 0; t < n; ++t) {
            // X_t for t = 1..N; the t = N sample equals the t = 0 grid point.
            const std::int64_t row = (t + n - 1) % n;
            values(row, r) = scale * buf[static_cast<std::size_t>(t)].real();
        }
    }
    return MultivariateSeries(std::move(values));
}

}  // namespace lrw
