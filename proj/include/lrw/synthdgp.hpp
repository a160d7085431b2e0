#pragma once

#include <cstdint>
#include <string>

#include "lrw/hermitian.hpp"
#include "lrw/series.hpp"

namespace lrw {

enum class DgpKind { thDGP1, thDGP2, thDGP3, DGP1, DGP2, DGP3, custom };

DgpKind dgp_kind_from_string(const std::string& name);
std::string dgp_kind_to_string(DgpKind kind);

/// A fully instantiated data-generating process: true memory parameters and
/// true long-run variance / precision pair. Presets are block designs,
/// G (or P) = I_{p/20} (x) G_k, with D drawn uniformly from [0.1, 0.45] per
/// component.
struct DgpSpec {
    DgpKind kind = DgpKind::custom;
    int p = 0;
    Eigen::VectorXd d0;
    HermitianMatrix g0;
    HermitianMatrix p0;  // g0^{-1}
};

/// Build a preset for dimension p (a positive multiple of 20). The seed
/// drives the random memory parameters.
DgpSpec dgp_preset(DgpKind kind, int p, std::uint64_t seed);

/// Custom spec from explicit D and either G or P (the other is derived).
DgpSpec dgp_custom(Eigen::VectorXd d0, const HermitianMatrix& matrix, bool matrix_is_precision);

/// Gaussian series whose spectral density on the Fourier grid is exactly
/// lambda^{-D} G lambda^{-D}: independent complex-normal draws per frequency
/// with that covariance, Hermitian-symmetric extension, inverse transform.
/// N must be even and >= 8; output is deterministic given the seed.
MultivariateSeries simulate(const DgpSpec& spec, std::int64_t n, std::uint64_t seed);

}  // namespace lrw
