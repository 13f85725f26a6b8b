// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef POINTSP_NORMALS_HPP
#define POINTSP_NORMALS_HPP

#include <vector>

#include "pointsp/cloud.hpp"
#include "pointsp/neighbor_graph.hpp"

namespace pointsp {

struct NormalEstimate {
    PointCloud cloud;                    // input points with normals populated
    std::vector<int> degenerate_indices; // points whose neighborhood was (near-)collinear
};

/// PCA normals: for each point, the unit eigenvector of the smallest
/// eigenvalue of the covariance of {neighbors} + {the point}. Signs are
/// canonicalized so the largest-magnitude component is positive. A
/// neighborhood with two (near-)zero eigenvalues is flagged degenerate and
/// gets an arbitrary unit vector orthogonal to its dominant direction.
/// Clouds that already carry normals are returned untouched.
NormalEstimate estimate_normals(const PointCloud& cloud, const NeighborGraph& graph);

} // namespace pointsp

#endif // POINTSP_NORMALS_HPP
