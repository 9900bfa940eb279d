#pragma once

#include <cstddef>

// Data-parallel inner loops shared by the field samplers and the
// max-stable assembly.  Each kernel has a scalar reference implementation
// and an AVX2 variant; the active one is chosen once at startup from CPU
// capabilities.  The scalar versions use std::fma so both paths produce
// bit-identical results, which the equivalence tests assert.

namespace maxstab::kernels {

struct MinMax {
    double min;
    double max;
};

// min/max over x[0..n); n == 0 yields {+inf, -inf}.
MinMax reduce_min_max(const double* x, std::size_t n);

// acc[i] = max(acc[i], x[i] + shift)
void max_shift_accumulate(double* acc, const double* x, double shift, std::size_t n);

// dst[i] = y[i] + w[i] * delta  (dst may alias y)
void axpy_blend(double* dst, const double* y, const double* w, double delta, std::size_t n);

// Name of the dispatched implementation: "avx2" or "scalar".
const char* active_backend();

namespace detail {
MinMax reduce_min_max_scalar(const double* x, std::size_t n);
void max_shift_accumulate_scalar(double* acc, const double* x, double shift, std::size_t n);
void axpy_blend_scalar(double* dst, const double* y, const double* w, double delta, std::size_t n);
bool avx2_available();
#if defined(__x86_64__) || defined(_M_X64)
MinMax reduce_min_max_avx2(const double* x, std::size_t n);
void max_shift_accumulate_avx2(double* acc, const double* x, double shift, std::size_t n);
void axpy_blend_avx2(double* dst, const double* y, const double* w, double delta, std::size_t n);
#endif
} // namespace detail

} // namespace maxstab::kernels
