// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/kdtree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pointsp {

namespace {

// Max-heap ordering: the worst candidate (largest by neighbor_less) on top.
inline bool heap_less(const Neighbor& a, const Neighbor& b) {
    return neighbor_less(a, b);
}

inline void heap_offer(std::vector<Neighbor>& heap, int k, const Neighbor& cand) {
    if (static_cast<int>(heap.size()) < k) {
        heap.push_back(cand);
        std::push_heap(heap.begin(), heap.end(), heap_less);
    } else if (neighbor_less(cand, heap.front())) {
        std::pop_heap(heap.begin(), heap.end(), heap_less);
        heap.back() = cand;
        std::push_heap(heap.begin(), heap.end(), heap_less);
    }
}

} // namespace

KdTree::KdTree(std::span<const Eigen::Vector3d> points) : points_(points) {
    indices_.resize(points.size());
    std::iota(indices_.begin(), indices_.end(), 0);
    if (!indices_.empty()) {
        nodes_.reserve(2 * indices_.size() / kLeafSize + 2);
        root_ = build(0, static_cast<int>(indices_.size()));
    }
}

int KdTree::build(int begin, int end) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    nodes_[id].begin = begin;
    nodes_[id].end = end;
    if (end - begin <= kLeafSize) return id;

    // Split on the axis of largest extent, at the median point.
    Eigen::Vector3d lo = points_[indices_[begin]];
    Eigen::Vector3d hi = lo;
    for (int i = begin + 1; i < end; ++i) {
        lo = lo.cwiseMin(points_[indices_[i]]);
        hi = hi.cwiseMax(points_[indices_[i]]);
    }
    int axis = 0;
    (hi - lo).maxCoeff(&axis);
    if (hi[axis] == lo[axis]) return id; // all points coincide: keep as leaf

    const int mid = begin + (end - begin) / 2;
    std::nth_element(indices_.begin() + begin, indices_.begin() + mid, indices_.begin() + end,
                     [&](int a, int b) {
                         if (points_[a][axis] != points_[b][axis])
                             return points_[a][axis] < points_[b][axis];
                         return a < b;
                     });
    nodes_[id].axis = axis;
    nodes_[id].split = points_[indices_[mid]][axis];

    const int left = build(begin, mid);
    const int right = build(mid, end);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

void KdTree::search(int node, const Eigen::Vector3d& query, int k, int exclude,
                    std::vector<Neighbor>& heap) const {
    const Node& n = nodes_[node];
    if (n.left < 0) {
        for (int i = n.begin; i < n.end; ++i) {
            const int idx = indices_[i];
            if (idx == exclude) continue;
            heap_offer(heap, k, Neighbor{idx, (query - points_[idx]).squaredNorm()});
        }
        return;
    }

    const double delta = query[n.axis] - n.split;
    const int near = delta < 0.0 ? n.left : n.right;
    const int far = delta < 0.0 ? n.right : n.left;
    search(near, query, k, exclude, heap);
    // Visit the far side unless every point there is strictly worse than the
    // current worst; on exact ties a lower index may still win.
    if (static_cast<int>(heap.size()) < k || delta * delta <= heap.front().sq_dist) {
        search(far, query, k, exclude, heap);
    }
}

void KdTree::knn(const Eigen::Vector3d& query, int k, int exclude,
                 std::vector<Neighbor>& out) const {
    out.clear();
    if (root_ < 0 || k <= 0) return;
    out.reserve(static_cast<std::size_t>(k) + 1);
    search(root_, query, k, exclude, out);
    std::sort(out.begin(), out.end(), neighbor_less);
}

void KdTree::search_nearest(int node, const Eigen::Vector3d& query, double& best_sq) const {
    const Node& n = nodes_[node];
    if (n.left < 0) {
        for (int i = n.begin; i < n.end; ++i) {
            const double d = (query - points_[indices_[i]]).squaredNorm();
            if (d < best_sq) best_sq = d;
        }
        return;
    }
    const double delta = query[n.axis] - n.split;
    const int near = delta < 0.0 ? n.left : n.right;
    const int far = delta < 0.0 ? n.right : n.left;
    search_nearest(near, query, best_sq);
    if (delta * delta < best_sq) search_nearest(far, query, best_sq);
}

double KdTree::nearest_distance(const Eigen::Vector3d& query) const {
    double best = std::numeric_limits<double>::infinity();
    if (root_ >= 0) search_nearest(root_, query, best);
    return std::sqrt(best);
}

void brute_force_knn(std::span<const Eigen::Vector3d> points, const Eigen::Vector3d& query,
                     int k, int exclude, std::vector<Neighbor>& out) {
    out.clear();
    out.reserve(points.size());
    for (int i = 0; i < static_cast<int>(points.size()); ++i) {
        if (i == exclude) continue;
        out.push_back(Neighbor{i, (query - points[i]).squaredNorm()});
    }
    const auto take = std::min<std::size_t>(static_cast<std::size_t>(k), out.size());
    std::partial_sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(take), out.end(),
                      neighbor_less);
    out.resize(take);
}

} // namespace pointsp
