#include "fouest/fgn.hpp"

#include <fftw3.h>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fouest/rng.hpp"

namespace fouest {

namespace {

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex fftw_plan_mutex;

// In-place unnormalized forward DFT of a complex vector.
void forward_dft(std::vector<std::complex<double>>& a) {
    const auto n = static_cast<int>(a.size());
    auto* data = reinterpret_cast<fftw_complex*>(a.data());
    fftw_plan plan = nullptr;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        plan = fftw_plan_dft_1d(n, data, data, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(plan);
    }
}

// Davies-Harte: eigenvalues of the 2n-circulant embedding of gamma_H.
// Returns empty vector when the embedding has a significantly negative eigenvalue.
std::vector<double> embedding_eigenvalues(const Hurst& hurst, std::size_t n) {
    const std::size_t m = 2 * n;
    std::vector<std::complex<double>> c(m);
    for (std::size_t j = 0; j <= n; ++j) c[j] = fgn_autocovariance(hurst, static_cast<std::int64_t>(j));
    for (std::size_t j = 1; j < n; ++j) c[m - j] = c[j];
    forward_dft(c);

    std::vector<double> lambda(m);
    double max_lambda = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        lambda[j] = c[j].real();
        max_lambda = std::max(max_lambda, lambda[j]);
    }
    for (double& l : lambda) {
        if (l < 0.0) {
            if (l < -1e-9 * max_lambda) return {};  // genuinely indefinite
            l = 0.0;                                // rounding noise
        }
    }
    return lambda;
}

std::vector<double> sample_by_embedding(const std::vector<double>& lambda, std::size_t n,
                                        double scale, std::uint64_t seed) {
    const std::size_t m = 2 * n;
    GaussianRng rng(seed);
    std::vector<std::complex<double>> xi(m);
    const double inv_m = 1.0 / static_cast<double>(m);
    xi[0] = std::sqrt(lambda[0] * inv_m) * rng();
    for (std::size_t k = 1; k < n; ++k) {
        const double s = std::sqrt(0.5 * lambda[k] * inv_m);
        const double u = rng();
        const double v = rng();
        xi[k] = {s * u, s * v};
        xi[m - k] = std::conj(xi[k]);
    }
    xi[n] = std::sqrt(lambda[n] * inv_m) * rng();
    forward_dft(xi);

    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = scale * xi[j].real();
    return out;
}

std::vector<double> sample_by_cholesky(const Hurst& hurst, const NoiseGrid& grid, double scale) {
    const auto n = static_cast<Eigen::Index>(grid.n);
    Eigen::MatrixXd cov(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j)
            cov(i, j) = cov(j, i) = fgn_autocovariance(hurst, i - j);

    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("sample_fgn: dense Cholesky of the fGN covariance failed at grid size n=" +
                                 std::to_string(grid.n));

    GaussianRng rng(grid.seed);
    Eigen::VectorXd z(n);
    for (Eigen::Index i = 0; i < n; ++i) z(i) = rng();
    Eigen::VectorXd x = llt.matrixL() * z;

    std::vector<double> out(grid.n);
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = scale * x(i);
    return out;
}

}  // namespace

double fgn_autocovariance(const Hurst& hurst, std::int64_t k) {
    const double two_h = 2.0 * hurst.value();
    const double a = std::abs(static_cast<double>(k));
    return 0.5 * (std::pow(a + 1.0, two_h) - 2.0 * std::pow(a, two_h) +
                  std::pow(std::abs(a - 1.0), two_h));
}

std::vector<double> sample_fgn(const Hurst& hurst, const NoiseGrid& grid) {
    grid.validate();
    const double scale = std::pow(grid.h, hurst.value());
    if (grid.n == 1) {
        GaussianRng rng(grid.seed);
        return {scale * rng()};
    }
    // Small systems: dense Cholesky is exact and cheaper than two FFTs.
    if (grid.n < 16) return sample_by_cholesky(hurst, grid, scale);

    const std::vector<double> lambda = embedding_eigenvalues(hurst, grid.n);
    if (lambda.empty()) return sample_by_cholesky(hurst, grid, scale);
    return sample_by_embedding(lambda, grid.n, scale, grid.seed);
}

std::vector<double> sample_fbm(const Hurst& hurst, const NoiseGrid& grid) {
    std::vector<double> x = sample_fgn(hurst, grid);
    for (std::size_t i = 1; i < x.size(); ++i) x[i] += x[i - 1];
    return x;
}

}  // namespace fouest
