#include "maxstab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <limits>

// Compiled with -mavx2 -mfma; only reached after the runtime cpuid check.

namespace maxstab::kernels::detail {

MinMax reduce_min_max_avx2(const double* x, std::size_t n) {
    const std::size_t tail = n % 4;
    const std::size_t vn = n - tail;
    MinMax r{std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity()};
    if (vn) {
        __m256d vmin = _mm256_loadu_pd(x);
        __m256d vmax = vmin;
        for (std::size_t i = 4; i < vn; i += 4) {
            const __m256d v = _mm256_loadu_pd(x + i);
            vmin = _mm256_min_pd(vmin, v);
            vmax = _mm256_max_pd(vmax, v);
        }
        alignas(32) double lo[4], hi[4];
        _mm256_store_pd(lo, vmin);
        _mm256_store_pd(hi, vmax);
        for (int k = 0; k < 4; ++k) {
            r.min = lo[k] < r.min ? lo[k] : r.min;
            r.max = hi[k] > r.max ? hi[k] : r.max;
        }
    }
    for (std::size_t i = vn; i < n; ++i) {
        r.min = x[i] < r.min ? x[i] : r.min;
        r.max = x[i] > r.max ? x[i] : r.max;
    }
    return r;
}

void max_shift_accumulate_avx2(double* acc, const double* x, double shift, std::size_t n) {
    const std::size_t tail = n % 4;
    const std::size_t vn = n - tail;
    const __m256d vs = _mm256_set1_pd(shift);
    for (std::size_t i = 0; i < vn; i += 4) {
        const __m256d v = _mm256_add_pd(_mm256_loadu_pd(x + i), vs);
        const __m256d a = _mm256_loadu_pd(acc + i);
        _mm256_storeu_pd(acc + i, _mm256_max_pd(a, v));
    }
    for (std::size_t i = vn; i < n; ++i) {
        const double v = x[i] + shift;
        if (v > acc[i]) acc[i] = v;
    }
}

void axpy_blend_avx2(double* dst, const double* y, const double* w, double delta, std::size_t n) {
    const std::size_t tail = n % 4;
    const std::size_t vn = n - tail;
    const __m256d vd = _mm256_set1_pd(delta);
    for (std::size_t i = 0; i < vn; i += 4) {
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d vw = _mm256_loadu_pd(w + i);
        _mm256_storeu_pd(dst + i, _mm256_fmadd_pd(vw, vd, vy));
    }
    for (std::size_t i = vn; i < n; ++i) {
        dst[i] = __builtin_fma(w[i], delta, y[i]);
    }
}

} // namespace maxstab::kernels::detail

#endif // x86_64
