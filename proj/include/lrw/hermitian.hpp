#pragma once

#include <Eigen/Dense>
#include <complex>

#include "lrw/errors.hpp"

namespace lrw {

using Complex = std::complex<double>;

/// p x p complex matrix with the conjugate-symmetry invariant enforced on
/// construction. Inputs are gated on max asymmetry <= 1e-12 (relative to the
/// largest entry for matrices above unit scale) and then symmetrized as
/// (M + M*)/2, which also clears the imaginary part of the diagonal.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(Eigen::MatrixXcd m);

    static HermitianMatrix identity(int dim);
    static HermitianMatrix zero(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& mat() const { return mat_; }
    Complex operator()(int r, int s) const { return mat_(r, s); }

    bool operator==(const HermitianMatrix& other) const { return mat_ == other.mat_; }

private:
    struct trusted_tag {};
    HermitianMatrix(Eigen::MatrixXcd m, trusted_tag) : mat_(std::move(m)) {}
    friend HermitianMatrix hermitian_unchecked(Eigen::MatrixXcd m);

    Eigen::MatrixXcd mat_;
};

/// Fast path for matrices that are Hermitian by construction (rank updates,
/// U diag U* products). Symmetrizes without the asymmetry gate.
HermitianMatrix hermitian_unchecked(Eigen::MatrixXcd m);

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // unitary, columns
};

/// Hermitian eigendecomposition M = U diag(eigenvalues) U*.
EigenDecomposition eigh(const HermitianMatrix& m);

/// log det of a positive definite matrix, as the sum of log eigenvalues.
/// Throws NotPositiveDefinite when any eigenvalue is <= 0.
double logdet_pd(const HermitianMatrix& m);

struct Norms {
    double frobenius;
    double spectral;  // max |eigenvalue| for Hermitian input
    double max_abs;
};

Norms norms(const HermitianMatrix& m);

/// Entrywise complex soft threshold of the off-diagonal entries:
/// z -> (z/|z|) max(|z| - nu, 0); the diagonal passes through unchanged.
HermitianMatrix soft_threshold_offdiag(const HermitianMatrix& m, double nu);

/// Inverse of a positive definite matrix. Throws NotPositiveDefinite.
HermitianMatrix inverse_pd(const HermitianMatrix& m);

}  // namespace lrw
