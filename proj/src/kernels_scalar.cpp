#include "maxstab/kernels.hpp"

#include <cmath>
#include <limits>

namespace maxstab::kernels::detail {

MinMax reduce_min_max_scalar(const double* x, std::size_t n) {
    MinMax r{std::numeric_limits<double>::infinity(),
             -std::numeric_limits<double>::infinity()};
    for (std::size_t i = 0; i < n; ++i) {
        r.min = x[i] < r.min ? x[i] : r.min;
        r.max = x[i] > r.max ? x[i] : r.max;
    }
    return r;
}

void max_shift_accumulate_scalar(double* acc, const double* x, double shift, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double v = x[i] + shift;
        if (v > acc[i]) acc[i] = v;
    }
}

void axpy_blend_scalar(double* dst, const double* y, const double* w, double delta, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        dst[i] = std::fma(w[i], delta, y[i]);
    }
}

} // namespace maxstab::kernels::detail
