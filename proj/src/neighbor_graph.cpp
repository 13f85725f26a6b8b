// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/neighbor_graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pointsp/kdtree.hpp"

namespace pointsp {

double median_of(std::vector<double> values) {
    const auto n = values.size();
    const auto mid = n / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid),
                     values.end());
    const double upper = values[mid];
    if (n % 2 == 1) return upper;
    const double lower =
        *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lower + upper);
}

NeighborGraph build_neighbor_graph(const PointCloud& cloud, int k, KnnBackend backend) {
    validate_cloud(cloud);
    const int n = cloud.size();
    if (n < 2) throw ParameterError("neighbor graph needs at least 2 points, got " + std::to_string(n));
    if (k < 1 || k > n - 1) {
        throw ParameterError("k must satisfy 1 <= k <= N-1 (k=" + std::to_string(k) +
                             ", N=" + std::to_string(n) + ")");
    }

    if (backend == KnnBackend::automatic) {
        backend = n > kBruteForceLimit ? KnnBackend::kd_tree : KnnBackend::brute_force;
    }

    NeighborGraph graph(k, n);
    const std::span<const Eigen::Vector3d> pts(cloud.points);
    std::vector<Neighbor> found;

    if (backend == KnnBackend::kd_tree) {
        const KdTree tree(pts);
        for (int i = 0; i < n; ++i) {
            tree.knn(pts[i], k, i, found);
            const auto row = static_cast<std::size_t>(i) * static_cast<std::size_t>(k);
            for (int j = 0; j < k; ++j) {
                graph.neighbors_[row + static_cast<std::size_t>(j)] = found[static_cast<std::size_t>(j)].index;
                graph.distances_[row + static_cast<std::size_t>(j)] =
                    std::sqrt(found[static_cast<std::size_t>(j)].sq_dist);
            }
            graph.radii_[static_cast<std::size_t>(i)] = graph.distances_[row + static_cast<std::size_t>(k - 1)];
        }
    } else {
        for (int i = 0; i < n; ++i) {
            brute_force_knn(pts, pts[i], k, i, found);
            const auto row = static_cast<std::size_t>(i) * static_cast<std::size_t>(k);
            for (int j = 0; j < k; ++j) {
                graph.neighbors_[row + static_cast<std::size_t>(j)] = found[static_cast<std::size_t>(j)].index;
                graph.distances_[row + static_cast<std::size_t>(j)] =
                    std::sqrt(found[static_cast<std::size_t>(j)].sq_dist);
            }
            graph.radii_[static_cast<std::size_t>(i)] = graph.distances_[row + static_cast<std::size_t>(k - 1)];
        }
    }

    graph.median_radius_ = median_of(graph.radii_);
    return graph;
}

} // namespace pointsp
