#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace fouest {

/// splitmix64 finalizer; full-period bijective mix on 64-bit state.
inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a master seed and a stream index
/// (replication number, multistart id, ...). Counter-based, so replications
/// can be dispatched in any order and still reproduce bit-identically.
inline std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return splitmix64(splitmix64(master) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

/// Standard-normal generator: mt19937_64 + Box-Muller on 53-bit uniforms.
/// The transform is spelled out (rather than std::normal_distribution) so the
/// draw sequence is pinned by the standard-specified engine alone.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace fouest
