// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef POINTSP_NEIGHBOR_GRAPH_HPP
#define POINTSP_NEIGHBOR_GRAPH_HPP

#include <span>
#include <vector>

#include "pointsp/cloud.hpp"

namespace pointsp {

enum class KnnBackend {
    automatic,   // brute force up to kBruteForceLimit points, kd-tree beyond
    brute_force,
    kd_tree,
};

inline constexpr int kBruteForceLimit = 1024;

/// k-nearest-neighbor structure: per-point neighbor indices (self excluded,
/// ascending by distance, distance ties toward the lower index), the aligned
/// distance multiset D_i, the local radius r_i = max D_i, and the median of
/// all local radii.
class NeighborGraph {
public:
    NeighborGraph() = default;
    NeighborGraph(int k, int n)
        : k_(k),
          neighbors_(static_cast<std::size_t>(k) * static_cast<std::size_t>(n)),
          distances_(static_cast<std::size_t>(k) * static_cast<std::size_t>(n)),
          radii_(static_cast<std::size_t>(n)) {}

    int k() const { return k_; }
    int size() const { return static_cast<int>(radii_.size()); }

    std::span<const int> neighbors_of(int i) const {
        return {neighbors_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(k_),
                static_cast<std::size_t>(k_)};
    }
    std::span<const double> distances_of(int i) const {
        return {distances_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(k_),
                static_cast<std::size_t>(k_)};
    }

    double radius(int i) const { return radii_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& radii() const { return radii_; }
    double median_radius() const { return median_radius_; }

private:
    friend NeighborGraph build_neighbor_graph(const PointCloud&, int, KnnBackend);

    int k_ = 0;
    std::vector<int> neighbors_;    // n rows of k indices
    std::vector<double> distances_; // Euclidean, ascending per row
    std::vector<double> radii_;
    double median_radius_ = 0.0;
};

/// Builds the exact k-NN graph. Requires N >= 2 and 1 <= k <= N-1; rejects
/// non-finite coordinates. Both backends produce identical graphs.
NeighborGraph build_neighbor_graph(const PointCloud& cloud, int k,
                                   KnnBackend backend = KnnBackend::automatic);

/// Median with the even-count convention: mean of the two central values.
double median_of(std::vector<double> values);

} // namespace pointsp

#endif // POINTSP_NEIGHBOR_GRAPH_HPP
