#pragma once

#include <cstddef>
#include <string>

// Dense floating-point kernels behind the cost oracle. Scalar reference
// implementations always exist; on x86-64 an AVX2 variant of each kernel is
// compiled in and selected at runtime when the CPU supports it. The two
// variants are equivalence-tested against each other.

namespace vckm::kernels {

enum class Backend { scalar, avx2 };

bool cpu_has_avx2();

// Backend used by the dispatching entry points below. Defaults to avx2 when
// compiled in and supported by the CPU, otherwise scalar.
Backend active_backend();
std::string backend_name();

// Forcing an unavailable backend throws std::invalid_argument.
void force_backend(Backend b);
void reset_backend();

// dst[i] += src[i]
void vec_accumulate(double* dst, const double* src, std::size_t n);
// sum_i (a[i] - b[i])^2
double sum_sq_diff(const double* a, const double* b, std::size_t n);

void vec_accumulate_scalar(double* dst, const double* src, std::size_t n);
double sum_sq_diff_scalar(const double* a, const double* b, std::size_t n);

#if defined(VCKM_HAVE_AVX2)
void vec_accumulate_avx2(double* dst, const double* src, std::size_t n);
double sum_sq_diff_avx2(const double* a, const double* b, std::size_t n);
#endif

}  // namespace vckm::kernels
