// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded random streams. Every draw algorithm is spelled out here instead
// of relying on std:: distributions, whose output is implementation-defined;
// identical (seed, call sequence) must give identical results on every build.

#ifndef POINTSP_RNG_HPP
#define POINTSP_RNG_HPP

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace pointsp {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Independent child seed for stream `stream` of a parent seed. Used to keep
/// per-point work order-independent: parallel and serial runs draw the same
/// numbers.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream));
}

/// Deterministic generator: xoshiro256** with splitmix64 seeding (cheap to
/// construct, one per point in the interpolation seed streams), plus
/// explicitly-coded distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            x = splitmix64(x);
            word = x;
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, n), unbiased (Lemire rejection).
    std::uint64_t below(std::uint64_t n) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            const std::uint64_t t = (0 - n) % n;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next_u64()) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    /// Uniform integer on [lo, hi], inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(below(span));
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller; the second value of each pair is cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Eigen::Vector3d gaussian3() {
        const double x = gaussian();
        const double y = gaussian();
        const double z = gaussian();
        return {x, y, z};
    }

    /// Uniform direction on the unit sphere.
    Eigen::Vector3d unit_vector() {
        while (true) {
            const Eigen::Vector3d g = gaussian3();
            const double n = g.norm();
            if (n > 1e-12) return g / n;
        }
    }

    /// Uniform m-subset of {0,...,n-1} in draw order (partial Fisher-Yates).
    std::vector<int> sample_without_replacement(int n, int m) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t) {
            const auto j = t + static_cast<int>(below(static_cast<std::uint64_t>(n - t)));
            std::swap(pool[static_cast<std::size_t>(t)], pool[static_cast<std::size_t>(j)]);
            out.push_back(pool[static_cast<std::size_t>(t)]);
        }
        return out;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4] = {};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace pointsp

#endif // POINTSP_RNG_HPP
