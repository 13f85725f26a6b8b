// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/metrics.hpp"

#include <cmath>
#include <limits>
#include <span>

#include "pointsp/kdtree.hpp"
#include "pointsp/neighbor_graph.hpp"

namespace pointsp {

namespace {

// Mean nearest-neighbor distance from each source point into `target`.
double mean_nn_distance(std::span<const Eigen::Vector3d> source,
                        std::span<const Eigen::Vector3d> target) {
    double sum = 0.0;
    if (static_cast<int>(target.size()) > kBruteForceLimit) {
        const KdTree tree(target);
        for (const auto& p : source) sum += tree.nearest_distance(p);
    } else {
        for (const auto& p : source) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& q : target) {
                const double d = (p - q).squaredNorm();
                if (d < best) best = d;
            }
            sum += std::sqrt(best);
        }
    }
    return sum / static_cast<double>(source.size());
}

} // namespace

double chamfer_distance(const PointCloud& a, const PointCloud& b) {
    validate_cloud(a);
    validate_cloud(b);
    return mean_nn_distance(a.points, b.points) + mean_nn_distance(b.points, a.points);
}

} // namespace pointsp
