#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fouest/hurst.hpp"

namespace fouest {

/// Parameters (theta, H, sigma) of dX = -theta X dt + sigma dB^H.
struct ModelParams {
    ModelParams(double theta_, Hurst hurst_, double sigma_)
        : theta(theta_), hurst(hurst_), sigma(sigma_) {
        if (!(theta > 0.0)) throw std::invalid_argument("ModelParams: theta must be > 0");
        if (!(sigma > 0.0)) throw std::invalid_argument("ModelParams: sigma must be > 0");
    }

    double theta;
    Hurst hurst;
    double sigma;
};

enum class Scheme { euler_fine_grid, stationary_exact };

struct SimulationPlan {
    std::size_t n_obs;       ///< number of reported observations (>= 3)
    double h;                ///< observation lag
    std::size_t substeps;    ///< Euler refinement m >= 1 (ignored by stationary_exact)
    std::uint64_t seed;
    Scheme scheme;

    void validate() const {
        if (n_obs < 3) throw std::invalid_argument("SimulationPlan: n_obs must be >= 3");
        if (!(h > 0.0)) throw std::invalid_argument("SimulationPlan: h must be > 0");
        if (substeps < 1) throw std::invalid_argument("SimulationPlan: substeps must be >= 1");
    }
};

/// Equally spaced observations X_0, X_h, ..., X_{(K-1)h}.
struct ObservationSeries {
    double h = 0.0;
    std::vector<double> values;

    void validate() const;
};

/// Stationary autocovariance E(Y_0 Y_t) via the spectral integral
///   sigma^2 Gamma(2H+1) sin(pi H) / (2 pi) * Int_R cos(xt) |x|^{1-2H} / (theta^2+x^2) dx,
/// evaluated to absolute accuracy tol. The half-line integral is split at
/// c = max(theta, 1/t): the head absorbs the x^{1-2H} endpoint behaviour through a
/// power substitution, the tail is summed over cosine half-periods with series
/// acceleration. Throws ToleranceError if tol is unreachable within budget.
double fou_autocovariance(const ModelParams& params, double t, double tol = 1e-10);

/// N-term large-lag expansion of E(Y_0 Y_t):
///   (1/2) sigma^2 sum_{n=1}^{N} theta^{-2n} [prod_{k=0}^{2n-1} (2H-k)] t^{2H-2n}.
/// Identically zero at H = 1/2 (factor 2H-1), matching the exponential decay there.
double fou_autocov_tail_expansion(const ModelParams& params, double t, int n_terms);

/// Autocovariance values at lags 0, h, ..., (count-1) h. Quadrature is used up to the
/// crossover lag m* where it agrees with the tail expansion within switch_tol on two
/// consecutive lags; the expansion is used beyond. m* is stored for diagnostics.
class AutocovTable {
public:
    AutocovTable(const ModelParams& params, double h, std::size_t count, double tol = 1e-10);

    double operator[](std::size_t k) const { return values_[k]; }
    std::size_t size() const { return values_.size(); }
    std::size_t crossover_lag() const { return m_star_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
    std::size_t m_star_;
};

/// Draws of the stationary sequence (Y_0, Y_h, ..., Y_{(n-1)h}), exact for the
/// Toeplitz covariance fou_autocovariance(params, |i-j| h). Uses a padded circulant
/// embedding when it is nonnegative definite (O(n log n) per draw) and the
/// Levinson-Durbin innovations recursion otherwise (O(n^2) per draw, always valid
/// for positive definite covariances). The covariance row is shared across draws.
class StationaryFouSampler {
public:
    StationaryFouSampler(const ModelParams& params, double h, std::size_t n, double tol = 1e-10);
    ~StationaryFouSampler();
    StationaryFouSampler(StationaryFouSampler&&) noexcept;
    StationaryFouSampler& operator=(StationaryFouSampler&&) noexcept;

    std::vector<double> sample(std::uint64_t seed) const;
    double covariance(std::size_t lag) const;
    bool uses_embedding() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Simulate an fOU path observed at lag h.
///  - euler_fine_grid: Euler-Maruyama on step h/substeps driven by exact fGN, X_0 = 0,
///    every substeps-th point reported.
///  - stationary_exact: one draw from StationaryFouSampler.
ObservationSeries simulate_fou(const ModelParams& params, const SimulationPlan& plan);

}  // namespace fouest
