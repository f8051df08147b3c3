#pragma once

#include <cmath>
#include <cstdint>

namespace footnet {

/// splitmix64 generator with explicit draw helpers. The standard <random>
/// distributions are implementation-defined, so seeded outputs would not be
/// reproducible byte-for-byte across standard libraries; these are.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// Uniform double in [0, 1).
    double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform_real(double lo, double hi) { return lo + uniform_real() * (hi - lo); }

    /// Pareto-tailed positive value: scale * u^(-1/alpha), clamped to cap.
    double pareto(double scale, double alpha, double cap) {
        double u = uniform_real();
        if (u < 1e-12) u = 1e-12;
        double v = scale / std::pow(u, 1.0 / alpha);
        return v > cap ? cap : v;
    }

private:
    std::uint64_t state_;
};

} // namespace footnet
