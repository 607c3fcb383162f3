#pragma once

#include <cmath>
#include <cstdint>

#include "seqspace/coordinate_space.hpp"
#include "seqspace/vec.hpp"

namespace seqspace {

/// Deterministic xoshiro256++ stream seeded via splitmix64. Hand-rolled so
/// that seeded runs are reproducible across standard library
/// implementations (std::normal_distribution is not pinned by the standard).
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (pairs cached).
    double gaussian() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        while (u1 == 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    bool coin() { return (next() & 1u) != 0; }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        x += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4] = {};
    double cached_ = 0.0;
    bool have_cached_ = false;
};

/// Random point with unit r-norm. Uniform on the sphere for r = 2; for other
/// exponents it is a full-support search distribution (Gaussian direction
/// normalized in the r-norm), which is what the attainment sampler needs.
inline Vec sample_unit_vector(Rng& rng, const CoordinateSpace& space) {
    Vec v(space.dim);
    double norm = 0.0;
    while (norm == 0.0) {
        for (std::size_t k = 0; k < space.dim; ++k) v[k] = rng.gaussian();
        norm = vector_norm(space, v);
    }
    return v.scaled(1.0 / norm);
}

} // namespace seqspace
