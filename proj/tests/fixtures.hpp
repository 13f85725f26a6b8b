// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Shared test fixtures and independent oracles. The oracles deliberately
// avoid the library's spatial structures: plain full sorts and full rescans
// only, so they stay meaningful as checks.

#ifndef POINTSP_TESTS_FIXTURES_HPP
#define POINTSP_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "pointsp/cloud.hpp"
#include "pointsp/rng.hpp"

namespace pointsp::testing {

inline PointCloud make_collinear_fixture() {
    PointCloud cloud;
    for (const double x : {0.0, 1.0, 2.0, 3.0, 10.0}) cloud.points.emplace_back(x, 0.0, 0.0);
    return cloud;
}

inline PointCloud make_unit_square() {
    PointCloud cloud;
    cloud.points.emplace_back(0.0, 0.0, 0.0);
    cloud.points.emplace_back(1.0, 0.0, 0.0);
    cloud.points.emplace_back(1.0, 1.0, 0.0);
    cloud.points.emplace_back(0.0, 1.0, 0.0);
    return cloud;
}

/// n points uniform on the unit sphere surface.
inline PointCloud make_sphere_surface(int n, std::uint64_t seed) {
    Rng rng(seed);
    PointCloud cloud;
    cloud.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cloud.points.push_back(rng.unit_vector());
    return cloud;
}

/// n points uniform in the axis-aligned cube of the given half width.
inline PointCloud make_cube_cloud(int n, double half_width, std::uint64_t seed) {
    Rng rng(seed);
    PointCloud cloud;
    cloud.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        cloud.points.emplace_back(rng.uniform(-half_width, half_width),
                                  rng.uniform(-half_width, half_width),
                                  rng.uniform(-half_width, half_width));
    }
    return cloud;
}

/// Unit sphere surface plus `outliers` points at radius in [3, 5].
inline PointCloud make_sphere_with_far_outliers(int n, int outliers, std::uint64_t seed) {
    PointCloud cloud = make_sphere_surface(n, seed);
    Rng rng(derive_seed(seed, 0xFA5));
    for (int i = 0; i < outliers; ++i) {
        cloud.points.push_back(rng.uniform(3.0, 5.0) * rng.unit_vector());
    }
    return cloud;
}

/// side x side grid on the z=0 plane with unit spacing.
inline PointCloud make_plane_grid(int side) {
    PointCloud cloud;
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
            cloud.points.emplace_back(static_cast<double>(i), static_cast<double>(j), 0.0);
        }
    }
    return cloud;
}

struct OracleNeighbor {
    int index;
    double sq_dist;
};

/// Full-sort k nearest neighbors of point `i`, self excluded, ties by index.
inline std::vector<OracleNeighbor> oracle_knn(const std::vector<Eigen::Vector3d>& pts, int i,
                                              int k) {
    std::vector<OracleNeighbor> all;
    for (int j = 0; j < static_cast<int>(pts.size()); ++j) {
        if (j == i) continue;
        const double dx = pts[static_cast<std::size_t>(j)].x() - pts[static_cast<std::size_t>(i)].x();
        const double dy = pts[static_cast<std::size_t>(j)].y() - pts[static_cast<std::size_t>(i)].y();
        const double dz = pts[static_cast<std::size_t>(j)].z() - pts[static_cast<std::size_t>(i)].z();
        all.push_back({j, dx * dx + dy * dy + dz * dz});
    }
    std::sort(all.begin(), all.end(), [](const OracleNeighbor& a, const OracleNeighbor& b) {
        if (a.sq_dist != b.sq_dist) return a.sq_dist < b.sq_dist;
        return a.index < b.index;
    });
    all.resize(static_cast<std::size_t>(std::min<int>(k, static_cast<int>(all.size()))));
    return all;
}

/// Brute-force farthest point sampling: every step rescans all pairwise
/// distances instead of keeping a running minimum.
inline std::vector<int> oracle_fps(const std::vector<Eigen::Vector3d>& pts, int m, int start) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> selected{start};
    std::vector<char> taken(static_cast<std::size_t>(n), 0);
    taken[static_cast<std::size_t>(start)] = 1;
    while (static_cast<int>(selected.size()) < m) {
        int best = -1;
        double best_score = -1.0;
        for (int i = 0; i < n; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            double min_sq = std::numeric_limits<double>::infinity();
            for (const int s : selected) {
                const double d =
                    (pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(s)])
                        .squaredNorm();
                min_sq = std::min(min_sq, d);
            }
            if (min_sq > best_score) {
                best_score = min_sq;
                best = i;
            }
        }
        selected.push_back(best);
        taken[static_cast<std::size_t>(best)] = 1;
    }
    return selected;
}

/// Empirical quantile, linear interpolation between order statistics.
inline double oracle_quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    if (v.size() == 1) return v[0];
    const double pos = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    const double t = pos - std::floor(pos);
    return (1.0 - t) * v[lo] + t * v[hi];
}

inline double oracle_median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace pointsp::testing

#endif // POINTSP_TESTS_FIXTURES_HPP
