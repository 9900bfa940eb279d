#include "maxstab/normal.hpp"

#include <cmath>
#include <stdexcept>

namespace maxstab {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

// Mills-ratio continued fraction, Phibar(x) = phi(x) / f(x) with
// f(x) = x + 1/(x + 2/(x + 3/(...))).  Accurate to ~1e-16 relative for
// x >= 8 at depth 40.
double mills_denom(double x) {
    double f = x;
    for (int k = 40; k >= 1; --k) f = x + k / f;
    return f;
}

} // namespace

double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x - kLogSqrt2Pi);
}

double log_std_normal_pdf(double x) {
    return -0.5 * x * x - kLogSqrt2Pi;
}

double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x * kInvSqrt2);
}

double std_normal_tail(double x) {
    if (x < 8.0) return 0.5 * std::erfc(x * kInvSqrt2);
    return std::exp(log_std_normal_tail(x));
}

double log_std_normal_tail(double x) {
    if (x < -8.0) {
        // Phibar(x) = 1 - Phibar(-x); the complement is tiny.
        return std::log1p(-std_normal_tail(-x));
    }
    if (x < 8.0) {
        return std::log(0.5 * std::erfc(x * kInvSqrt2));
    }
    return log_std_normal_pdf(x) - std::log(mills_denom(x));
}

namespace {

// Acklam's rational approximation of Phi^{-1}, |rel err| < 1.2e-9,
// then polished by the caller.
double acklam_inv_cdf(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

// Newton polish of log Phibar(x) = log_p.  Since d/dx log Phibar(x) is
// -phi(x)/Phibar(x), the update is x += resid * Phibar(x)/phi(x), with the
// ratio evaluated in log scale.
double polish_tail_inv(double x, double log_p) {
    for (int it = 0; it < 6; ++it) {
        const double lt = log_std_normal_tail(x);
        const double resid = lt - log_p;
        if (std::abs(resid) < 1e-13) break;
        x += resid * std::exp(lt - log_std_normal_pdf(x));
    }
    return x;
}

} // namespace

double std_normal_tail_inv(double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("std_normal_tail_inv: p outside (0,1)");
    const double x0 = -acklam_inv_cdf(p); // Phibar^{-1}(p) = -Phi^{-1}(p)
    return polish_tail_inv(x0, std::log(p));
}

double std_normal_tail_inv_log(double log_p) {
    if (!(log_p < 0.0)) throw std::domain_error("std_normal_tail_inv_log: log_p must be < 0");
    double x0;
    if (log_p > -690.0) {
        x0 = -acklam_inv_cdf(std::exp(log_p));
    } else {
        // Asymptotic inversion of log Phibar(x) ~ -x^2/2 - log(x) - log sqrt(2 pi).
        x0 = std::sqrt(-2.0 * log_p);
        for (int it = 0; it < 4; ++it) {
            x0 = std::sqrt(-2.0 * (log_p + std::log(x0) + kLogSqrt2Pi));
        }
    }
    return polish_tail_inv(x0, log_p);
}

double std_normal_inv(double p) { return -std_normal_tail_inv(p); }

double sample_truncated_normal_above(double sigma, double threshold, double u) {
    if (!(sigma > 0.0)) throw std::domain_error("sample_truncated_normal_above: sigma must be > 0");
    if (u <= 0.0) return threshold;
    if (u >= 1.0) u = 1.0 - 0x1.0p-53;
    const double z = threshold / sigma;
    const double log_p = std::log1p(-u) + log_std_normal_tail(z);
    const double x = sigma * std_normal_tail_inv_log(log_p);
    return x < threshold ? threshold : x;
}

} // namespace maxstab
