#include "vckm/kernels.hpp"

#include <stdexcept>

namespace vckm::kernels {

bool cpu_has_avx2() {
#if defined(VCKM_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

Backend pick_default() {
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend g_backend = pick_default();

}  // namespace

Backend active_backend() { return g_backend; }

std::string backend_name() { return g_backend == Backend::avx2 ? "avx2" : "scalar"; }

void force_backend(Backend b) {
    if (b == Backend::avx2 && !cpu_has_avx2())
        throw std::invalid_argument("kernels: avx2 backend not available");
    g_backend = b;
}

void reset_backend() { g_backend = pick_default(); }

void vec_accumulate_scalar(double* dst, const double* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += src[i];
}

double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void vec_accumulate(double* dst, const double* src, std::size_t n) {
#if defined(VCKM_HAVE_AVX2)
    if (g_backend == Backend::avx2) {
        vec_accumulate_avx2(dst, src, n);
        return;
    }
#endif
    vec_accumulate_scalar(dst, src, n);
}

double sum_sq_diff(const double* a, const double* b, std::size_t n) {
#if defined(VCKM_HAVE_AVX2)
    if (g_backend == Backend::avx2) return sum_sq_diff_avx2(a, b, n);
#endif
    return sum_sq_diff_scalar(a, b, n);
}

}  // namespace vckm::kernels
