#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace lrw::detail {

/// Y_k = sum_{t=0}^{N-1} x_t e^{-2 pi i t k / N} for k = 0..N/2 (real input).
std::vector<std::complex<double>> fft_r2c(const double* x, std::int64_t n);

/// Full forward transform of complex input, same sign convention.
std::vector<std::complex<double>> fft_c2c_forward(const std::vector<std::complex<double>>& in);

}  // namespace lrw::detail
