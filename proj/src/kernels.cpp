#include "maxstab/kernels.hpp"

namespace maxstab::kernels {

namespace detail {

bool avx2_available() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

} // namespace detail

namespace {

using ReduceFn = MinMax (*)(const double*, std::size_t);
using MaxAccFn = void (*)(double*, const double*, double, std::size_t);
using BlendFn = void (*)(double*, const double*, const double*, double, std::size_t);

struct Dispatch {
    ReduceFn reduce;
    MaxAccFn max_acc;
    BlendFn blend;
    const char* name;
};

Dispatch select() {
#if defined(__x86_64__) || defined(_M_X64)
    if (detail::avx2_available()) {
        return {detail::reduce_min_max_avx2, detail::max_shift_accumulate_avx2,
                detail::axpy_blend_avx2, "avx2"};
    }
#endif
    return {detail::reduce_min_max_scalar, detail::max_shift_accumulate_scalar,
            detail::axpy_blend_scalar, "scalar"};
}

const Dispatch& dispatch() {
    static const Dispatch d = select();
    return d;
}

} // namespace

MinMax reduce_min_max(const double* x, std::size_t n) { return dispatch().reduce(x, n); }

void max_shift_accumulate(double* acc, const double* x, double shift, std::size_t n) {
    dispatch().max_acc(acc, x, shift, n);
}

void axpy_blend(double* dst, const double* y, const double* w, double delta, std::size_t n) {
    dispatch().blend(dst, y, w, delta, n);
}

const char* active_backend() { return dispatch().name; }

} // namespace maxstab::kernels
