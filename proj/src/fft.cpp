#include "fch/spectral.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>
#include <vector>

namespace fch::detail {

namespace {

struct PlanSet {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

// FFTW plan creation is not thread-safe; execution through the new-array
// interface is. Plans are created once per size with FFTW_UNALIGNED so they
// accept arbitrary caller buffers, and kept for the process lifetime.
std::mutex g_plan_mutex;

PlanSet& plans_for(std::size_t n) {
    static std::unordered_map<std::size_t, PlanSet> cache;
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    double* re = fftw_alloc_real(n);
    fftw_complex* cx = fftw_alloc_complex(n / 2 + 1);
    PlanSet set;
    set.r2c = fftw_plan_dft_r2c_1d(static_cast<int>(n), re, cx,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    set.c2r = fftw_plan_dft_c2r_1d(static_cast<int>(n), cx, re,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(cx);
    fftw_free(re);
    return cache.emplace(n, set).first->second;
}

} // namespace

void forward_fft(std::size_t n, const double* in, std::complex<double>* out) {
    PlanSet& plans = plans_for(n);
    // 1-D out-of-place r2c preserves its input.
    fftw_execute_dft_r2c(plans.r2c, const_cast<double*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t m = 0; m <= n / 2; ++m) out[m] *= scale;
}

void inverse_fft(std::size_t n, const std::complex<double>* in, double* out) {
    PlanSet& plans = plans_for(n);
    // c2r destroys its input, so transform a scratch copy.
    std::vector<std::complex<double>> tmp(in, in + n / 2 + 1);
    fftw_execute_dft_c2r(plans.c2r, reinterpret_cast<fftw_complex*>(tmp.data()), out);
}

} // namespace fch::detail
