// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef POINTSP_KDTREE_HPP
#define POINTSP_KDTREE_HPP

#include <Eigen/Core>
#include <span>
#include <vector>

namespace pointsp {

struct Neighbor {
    int index = -1;
    double sq_dist = 0.0;
};

/// Ordering used for every nearest-neighbor structure in the library:
/// by squared distance, ties resolved toward the lower point index.
inline bool neighbor_less(const Neighbor& a, const Neighbor& b) {
    if (a.sq_dist != b.sq_dist) return a.sq_dist < b.sq_dist;
    return a.index < b.index;
}

/// Exact kd-tree over 3D points. Queries return the same neighbors, in the
/// same order, as a full brute-force scan with the neighbor_less tie-break;
/// squared distances are computed with the identical expression on both
/// paths, so the agreement is bit-for-bit.
class KdTree {
public:
    explicit KdTree(std::span<const Eigen::Vector3d> points);

    /// The k nearest neighbors of `query`, sorted by neighbor_less.
    /// `exclude` (a point index, or -1) is skipped; pass the query's own
    /// index for self-excluded neighborhoods.
    void knn(const Eigen::Vector3d& query, int k, int exclude, std::vector<Neighbor>& out) const;

    /// Distance from `query` to the closest indexed point.
    double nearest_distance(const Eigen::Vector3d& query) const;

    int size() const { return static_cast<int>(indices_.size()); }

private:
    struct Node {
        int left = -1;     // child node ids, -1 for leaf
        int right = -1;
        int begin = 0;     // range into indices_ (leaves)
        int end = 0;
        int axis = 0;
        double split = 0.0;
    };

    int build(int begin, int end);
    void search(int node, const Eigen::Vector3d& query, int k, int exclude,
                std::vector<Neighbor>& heap) const;
    void search_nearest(int node, const Eigen::Vector3d& query, double& best_sq) const;

    std::span<const Eigen::Vector3d> points_;
    std::vector<int> indices_;
    std::vector<Node> nodes_;
    int root_ = -1;

    static constexpr int kLeafSize = 16;
};

/// Brute-force k nearest neighbors with the same contract as KdTree::knn.
void brute_force_knn(std::span<const Eigen::Vector3d> points, const Eigen::Vector3d& query,
                     int k, int exclude, std::vector<Neighbor>& out);

} // namespace pointsp

#endif // POINTSP_KDTREE_HPP
