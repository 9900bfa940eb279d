#pragma once

namespace maxstab {

// Standard normal kernel. Tail quantities are available in log scale so
// that boundary computations stay finite far beyond the double underflow
// point of the plain cdf (needed for record boundaries at large d).

double std_normal_pdf(double x);
double log_std_normal_pdf(double x);

// Phi(x) = P(Z <= x); saturates at 0/1 in the extreme tails.
double std_normal_cdf(double x);

// Phibar(x) = P(Z > x).
double std_normal_tail(double x);

// log Phibar(x), finite for x up to ~1e7 (|result| ~ x^2/2).
double log_std_normal_tail(double x);

// Inverse of Phibar on (0,1).  Throws std::domain_error outside (0,1).
double std_normal_tail_inv(double p);

// Inverse of Phibar given log(p); accepts log_p down to ~-1e14.
double std_normal_tail_inv_log(double log_p);

// Inverse cdf, Phi^{-1}(p) = -Phibar^{-1}(p percent...); provided for
// convenience: std_normal_inv(p) == -std_normal_tail_inv(p).
double std_normal_inv(double p);

// Value of a N(0, sigma^2) variable conditioned to exceed `threshold`,
// mapped from a uniform u in [0,1) by inverse cdf: u = 0 gives exactly
// the threshold and the map is strictly increasing in u.  u numerically
// equal to 1 is clamped to the largest representable uniform.
double sample_truncated_normal_above(double sigma, double threshold, double u);

} // namespace maxstab
