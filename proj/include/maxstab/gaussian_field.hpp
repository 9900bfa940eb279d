#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "maxstab/rng.hpp"

namespace maxstab {

struct FieldVector {
    std::vector<double> values;
    double max_value = 0.0;
    double min_value = 0.0;
};

// A centered Gaussian field restricted to d fixed locations.  Backends
// supply exact finite-dimensional sampling plus a covariance oracle; the
// marginal standard deviations, their analytic upper bound sigma_bar and
// the drift mu are precomputed at build time.
class GaussianFieldModel {
public:
    virtual ~GaussianFieldModel() = default;

    int dimension() const { return d_; }
    double sigma(int i) const { return sigma_[i]; }
    double sigma_bar() const { return sigma_bar_; }
    double mu(int i) const { return mu_[i]; }
    const std::vector<double>& mu_vector() const { return mu_; }
    const std::string& backend() const { return backend_; }

    virtual double cov(int i, int j) const = 0;
    virtual void cov_column(int j, std::span<double> out) const;
    // Euclidean distance between locations, for the Hölder spot check.
    virtual double location_distance(int i, int j) const = 0;

    FieldVector sample(RandomStream& rs) const;
    void sample_values(std::span<double> out, RandomStream& rs) const;

    std::uint64_t draw_count() const { return draws_.load(std::memory_order_relaxed); }

protected:
    GaussianFieldModel(std::string backend, int d) : backend_(std::move(backend)), d_(d) {}
    // Called by backend constructors once sigma/mu are known.
    void finalize(std::vector<double> sigma, double sigma_bar, std::vector<double> mu);
    virtual void sample_into(std::span<double> out, RandomStream& rs) const = 0;

    std::string backend_;
    int d_ = 0;
    std::vector<double> sigma_;
    std::vector<double> mu_;
    double sigma_bar_ = 0.0;
    mutable std::atomic<std::uint64_t> draws_{0};
};

enum class MuMode { BrownResnick, Zero, Explicit };

// Exact fractional Brownian motion on the grid t_i = i*horizon/d via
// circulant embedding of the increment process; per-sample cost O(d log d).
std::unique_ptr<GaussianFieldModel> build_fbm_sampler(double hurst, int d, double horizon,
                                                      MuMode mu_mode = MuMode::BrownResnick,
                                                      std::vector<double> mu_explicit = {});

// Brownian motion on the same grid with O(d) cumulative-sum sampling.
std::unique_ptr<GaussianFieldModel> build_bm_sampler(int d, double horizon,
                                                     MuMode mu_mode = MuMode::BrownResnick,
                                                     std::vector<double> mu_explicit = {});

// Brownian sheet on the interior grid (i/d1, j/d2), i=1..d1, j=1..d2.
std::unique_ptr<GaussianFieldModel> build_brownian_sheet_sampler(int d1, int d2,
                                                                 MuMode mu_mode = MuMode::BrownResnick,
                                                                 std::vector<double> mu_explicit = {});

// Arbitrary 1-d locations with a user covariance oracle, sampled through a
// dense Cholesky factor.  Retained as the exactness oracle for the fast
// backends.
std::unique_ptr<GaussianFieldModel> build_dense_model(std::vector<double> locations,
                                                      double (*cov_fn)(double, double),
                                                      MuMode mu_mode = MuMode::BrownResnick,
                                                      std::vector<double> mu_explicit = {});

// Unit-spacing fractional Gaussian noise autocovariance at lag k.
double fgn_autocovariance(double hurst, std::int64_t k);

// Full Brownian-sheet grid including the zero boundary; (d1+1) x (d2+1)
// values in row-major order.  Exposed for tests of the sheet construction.
std::vector<double> brownian_sheet_full_grid(int d1, int d2, RandomStream& rs);

// Largest Var(X(s)-X(t)) / |s-t|^beta over sampled location pairs; an
// advisory check of the sufficient condition for B2.
double b2_spot_check(const GaussianFieldModel& model, double beta, int pairs, RandomStream& rs);

// --- conditioned sampling -------------------------------------------------

struct ConditionedDraw {
    FieldVector x;
    int nu = -1;
    double log_tail_sum = 0.0; // log sum_i Phibar(b / sigma_i) at this boundary
};

// Record boundary a*log(n) + C.
double record_boundary(double a, double C, std::int64_t n);

// Draws X from the proposal measure that conditions coordinate nu (chosen
// with pmf proportional to the marginal tail probabilities) to exceed the
// boundary a*log(n)+C.  Consumes exactly one nominal d-vector draw.
ConditionedDraw conditioned_sample(const GaussianFieldModel& model, double a, double C,
                                   std::int64_t n, RandomStream& rs);

// log of dP/dP^(n)(x) = log[ sum_i Phibar(b/sigma_i) / #{i : x_i > b} ].
// Throws std::invalid_argument when no coordinate exceeds the boundary.
double log_rn_derivative(const GaussianFieldModel& model, const FieldVector& x,
                         std::int64_t n, double a, double C);
double rn_derivative_nominal_over_conditional(const GaussianFieldModel& model,
                                              const FieldVector& x, std::int64_t n,
                                              double a, double C);

} // namespace maxstab
