#include "lrw/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace lrw::detail {

namespace {
// FFTW's planner mutates global state; every plan create/destroy in the
// library goes through this one lock. Execution itself is thread safe.
std::mutex g_planner_mutex;
}  // namespace

std::vector<std::complex<double>> fft_r2c(const double* x, std::int64_t n) {
    std::vector<double> in(x, x + n);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                          reinterpret_cast<fftw_complex*>(out.data()),
                                          FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return out;
}

std::vector<std::complex<double>> fft_c2c_forward(const std::vector<std::complex<double>>& in) {
    std::vector<std::complex<double>> mutable_in = in;
    std::vector<std::complex<double>> out(in.size());
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(in.size()),
                                      reinterpret_cast<fftw_complex*>(mutable_in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      FFTW_FORWARD, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
    return out;
}

}  // namespace lrw::detail
