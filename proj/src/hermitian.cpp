#include "lrw/hermitian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

namespace lrw {

namespace {
constexpr double kAsymmetryTol = 1e-12;
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw NonHermitian("matrix must be square and non-empty");
    const double scale = m.cwiseAbs().maxCoeff();
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kAsymmetryTol * std::max(1.0, scale))
        throw NonHermitian("matrix asymmetry " + std::to_string(asym) +
                           " exceeds the 1e-12 gate");
    mat_ = 0.5 * (m + m.adjoint().eval());
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    return hermitian_unchecked(Eigen::MatrixXcd::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
    return hermitian_unchecked(Eigen::MatrixXcd::Zero(dim, dim));
}

HermitianMatrix hermitian_unchecked(Eigen::MatrixXcd m) {
    Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint().eval());
    return HermitianMatrix(std::move(sym), HermitianMatrix::trusted_tag{});
}

EigenDecomposition eigh(const HermitianMatrix& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.mat());
    if (solver.info() != Eigen::Success)
        throw Error("Hermitian eigendecomposition did not converge");
    return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double logdet_pd(const HermitianMatrix& m) {
    const EigenDecomposition ed = eigh(m);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < ed.eigenvalues.size(); ++i) {
        const double ev = ed.eigenvalues[i];
        if (ev <= 0.0)
            throw NotPositiveDefinite("eigenvalue " + std::to_string(ev) +
                                      " is not positive");
        sum += std::log(ev);
    }
    return sum;
}

Norms norms(const HermitianMatrix& m) {
    Norms out;
    out.frobenius = m.mat().norm();
    out.max_abs = m.mat().cwiseAbs().maxCoeff();
    const EigenDecomposition ed = eigh(m);
    out.spectral = ed.eigenvalues.cwiseAbs().maxCoeff();
    return out;
}

HermitianMatrix soft_threshold_offdiag(const HermitianMatrix& m, double nu) {
    Eigen::MatrixXcd out = m.mat();
    const int p = m.dim();
    for (int s = 0; s < p; ++s) {
        for (int r = 0; r < p; ++r) {
            if (r == s) continue;
            const Complex z = out(r, s);
            const double mag = std::abs(z);
            out(r, s) = mag <= nu ? Complex(0.0, 0.0) : z * ((mag - nu) / mag);
        }
    }
    return hermitian_unchecked(std::move(out));
}

HermitianMatrix inverse_pd(const HermitianMatrix& m) {
    Eigen::LLT<Eigen::MatrixXcd> llt(m.mat());
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefinite("Cholesky factorization failed; matrix not PD");
    Eigen::MatrixXcd inv =
        llt.solve(Eigen::MatrixXcd::Identity(m.dim(), m.dim()));
    return hermitian_unchecked(std::move(inv));
}

}  // namespace lrw
