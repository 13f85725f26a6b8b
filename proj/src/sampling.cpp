// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/sampling.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "pointsp/rng.hpp"

namespace pointsp {

namespace {

// Shared FPS loop. A null mask means every point is eligible. Selection
// maximizes the min squared distance to the selected set (same argmax as the
// Euclidean distance), ties toward the lower index.
std::vector<int> fps_loop(const std::vector<Eigen::Vector3d>& pts,
                          const std::uint8_t* mask, int m, int start) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> selected;
    selected.reserve(static_cast<std::size_t>(m));
    std::vector<double> min_sq(static_cast<std::size_t>(n),
                               std::numeric_limits<double>::infinity());
    std::vector<char> taken(static_cast<std::size_t>(n), 0);

    int current = start;
    selected.push_back(current);
    taken[static_cast<std::size_t>(current)] = 1;

    for (int t = 1; t < m; ++t) {
        int best = -1;
        double best_sq = -1.0;
        for (int i = 0; i < n; ++i) {
            if (taken[static_cast<std::size_t>(i)]) continue;
            const double d = (pts[static_cast<std::size_t>(i)] -
                              pts[static_cast<std::size_t>(current)])
                                 .squaredNorm();
            auto& slot = min_sq[static_cast<std::size_t>(i)];
            if (d < slot) slot = d;
            if (mask && mask[static_cast<std::size_t>(i)] == 0) continue;
            if (slot > best_sq) {
                best_sq = slot;
                best = i;
            }
        }
        selected.push_back(best);
        taken[static_cast<std::size_t>(best)] = 1;
        current = best;
    }
    return selected;
}

} // namespace

int resolve_start(const PointCloud& cloud, const WeightVector* wv, StartRule rule) {
    const int n = cloud.size();
    const std::uint8_t* mask = (wv && wv->has_mask()) ? wv->mask.data() : nullptr;

    if (rule == StartRule::first_unmasked) {
        for (int i = 0; i < n; ++i) {
            if (!mask || mask[static_cast<std::size_t>(i)]) return i;
        }
    } else {
        const Eigen::Vector3d c = centroid(cloud);
        int best = -1;
        double best_sq = -1.0;
        for (int i = 0; i < n; ++i) {
            if (mask && mask[static_cast<std::size_t>(i)] == 0) continue;
            const double d = (cloud.points[static_cast<std::size_t>(i)] - c).squaredNorm();
            if (d > best_sq) {
                best_sq = d;
                best = i;
            }
        }
        if (best >= 0) return best;
    }
    throw ParameterError("mask filters out every point");
}

SampleResult fps(const PointCloud& cloud, int m, int start) {
    validate_cloud(cloud);
    const int n = cloud.size();
    if (m < 1 || m > n) {
        throw ParameterError("m must satisfy 1 <= m <= N (m=" + std::to_string(m) +
                             ", N=" + std::to_string(n) + ")");
    }
    if (start < 0 || start >= n) {
        throw ParameterError("start index " + std::to_string(start) + " out of range");
    }
    return SampleResult{fps_loop(cloud.points, nullptr, m, start), SampleMethod::fps, {}};
}

SampleResult ffps(const PointCloud& cloud, const WeightVector& wv, int m, int start) {
    validate_cloud(cloud);
    const int n = cloud.size();
    if (!wv.has_mask() || wv.size() != n) {
        throw ParameterError("filter mask not populated for this cloud");
    }
    const int available = wv.unmasked_count();
    if (m < 1 || m > available) {
        throw ParameterError("m=" + std::to_string(m) + " exceeds the unmasked count (" +
                             std::to_string(available) + " points available)");
    }
    if (start < 0 || start >= n || wv.mask[static_cast<std::size_t>(start)] == 0) {
        throw ParameterError("start index " + std::to_string(start) + " is filtered out");
    }
    return SampleResult{fps_loop(cloud.points, wv.mask.data(), m, start), SampleMethod::ffps, {}};
}

SampleResult ffps(const PointCloud& cloud, const WeightVector& wv, int m, StartRule rule) {
    return ffps(cloud, wv, m, resolve_start(cloud, &wv, rule));
}

SampleResult sws(const PointCloud& cloud, const WeightVector& wv, int m, std::uint64_t seed) {
    validate_cloud(cloud);
    const int n = cloud.size();
    if (!wv.has_sampling_weights() || wv.size() != n) {
        throw ParameterError("sampling weights not populated for this cloud");
    }
    std::vector<double> weight = wv.sampling_weight;
    int support = 0;
    for (const double w : weight) {
        if (w > 0.0) ++support;
    }
    if (m < 1 || m > support) {
        throw ParameterError("m=" + std::to_string(m) +
                             " exceeds the positive-weight support (" + std::to_string(support) +
                             " points available)");
    }

    Rng rng(seed);
    SampleResult result;
    result.method = SampleMethod::sws;
    result.seed = seed;
    result.indices.reserve(static_cast<std::size_t>(m));

    for (int t = 0; t < m; ++t) {
        double total = 0.0;
        for (const double w : weight) total += w;
        const double u = rng.uniform01() * total;
        double cum = 0.0;
        int chosen = -1;
        for (int i = 0; i < n; ++i) {
            const double w = weight[static_cast<std::size_t>(i)];
            if (w <= 0.0) continue;
            cum += w;
            if (cum > u) {
                chosen = i;
                break;
            }
            chosen = i; // rounding may leave u between the last mass and total
        }
        result.indices.push_back(chosen);
        weight[static_cast<std::size_t>(chosen)] = 0.0;
    }
    return result;
}

StartRule start_rule_from_string(const std::string& name) {
    if (name == "first_unmasked") return StartRule::first_unmasked;
    if (name == "max_centroid_distance_unmasked" || name == "max_centroid_distance") {
        return StartRule::max_centroid_distance_unmasked;
    }
    throw ParameterError("unknown start rule: " + name);
}

std::string to_string(StartRule rule) {
    return rule == StartRule::first_unmasked ? "first_unmasked"
                                             : "max_centroid_distance_unmasked";
}

} // namespace pointsp
