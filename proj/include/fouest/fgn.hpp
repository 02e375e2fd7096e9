#pragma once

#include <cstdint>
#include <vector>

#include "fouest/hurst.hpp"

namespace fouest {

/// Uniform sampling grid for the driving noise.
struct NoiseGrid {
    std::size_t n;       ///< number of increments, >= 1
    double h;            ///< time step, > 0
    std::uint64_t seed;  ///< stream seed

    void validate() const {
        if (n < 1) throw std::invalid_argument("NoiseGrid: n must be >= 1");
        if (!(h > 0.0)) throw std::invalid_argument("NoiseGrid: h must be > 0");
    }
};

/// Autocovariance of unit-step fractional Gaussian noise,
///   gamma_H(k) = (|k+1|^{2H} - 2|k|^{2H} + |k-1|^{2H}) / 2.
/// Symmetric in k by construction; gamma_H(0) = 1.
double fgn_autocovariance(const Hurst& hurst, std::int64_t k);

/// One exact draw of the fGN increment vector (B^H_h - B^H_0, ..., B^H_{nh} - B^H_{(n-1)h}).
/// Joint law: centered Gaussian, Cov(i,j) = h^{2H} gamma_H(|i-j|). Circulant embedding
/// (O(n log n)); falls back to dense Cholesky if the embedding is not nonnegative
/// definite. Same (grid.seed) gives a bit-identical vector.
std::vector<double> sample_fgn(const Hurst& hurst, const NoiseGrid& grid);

/// fBm positions B^H_h, ..., B^H_{nh} (partial sums of sample_fgn; B^H_0 = 0 implicit).
std::vector<double> sample_fbm(const Hurst& hurst, const NoiseGrid& grid);

}  // namespace fouest
