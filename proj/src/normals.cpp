// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/normals.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace pointsp {

namespace {

// Flip so the largest-magnitude component is positive (lowest axis wins ties).
Eigen::Vector3d canonical_sign(Eigen::Vector3d n) {
    int axis = 0;
    for (int a = 1; a < 3; ++a) {
        if (std::abs(n[a]) > std::abs(n[axis])) axis = a;
    }
    if (n[axis] < 0.0) n = -n;
    return n;
}

// Any unit vector orthogonal to `dir`.
Eigen::Vector3d orthogonal_unit(const Eigen::Vector3d& dir) {
    int axis = 0;
    for (int a = 1; a < 3; ++a) {
        if (std::abs(dir[a]) < std::abs(dir[axis])) axis = a;
    }
    const Eigen::Vector3d v = dir.cross(Eigen::Vector3d::Unit(axis));
    const double norm = v.norm();
    if (norm < 1e-12) return Eigen::Vector3d::UnitZ(); // dir itself is ~zero
    return v / norm;
}

} // namespace

NormalEstimate estimate_normals(const PointCloud& cloud, const NeighborGraph& graph) {
    validate_cloud(cloud);
    if (graph.size() != cloud.size()) {
        throw ParameterError("neighbor graph was not built on this cloud");
    }
    if (cloud.has_normals()) return NormalEstimate{cloud, {}};

    NormalEstimate result;
    result.cloud = cloud;
    result.cloud.normals.resize(cloud.points.size());

    const int n = cloud.size();
    for (int i = 0; i < n; ++i) {
        const auto nbrs = graph.neighbors_of(i);
        const int count = static_cast<int>(nbrs.size()) + 1; // neighborhood plus the point

        Eigen::Vector3d mean = cloud.points[static_cast<std::size_t>(i)];
        for (const int j : nbrs) mean += cloud.points[static_cast<std::size_t>(j)];
        mean /= static_cast<double>(count);

        Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
        const Eigen::Vector3d d0 = cloud.points[static_cast<std::size_t>(i)] - mean;
        cov += d0 * d0.transpose();
        for (const int j : nbrs) {
            const Eigen::Vector3d d = cloud.points[static_cast<std::size_t>(j)] - mean;
            cov += d * d.transpose();
        }

        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
        const Eigen::Vector3d eigenvalues = solver.eigenvalues(); // ascending
        const double lambda_mid = eigenvalues[1];
        const double lambda_max = eigenvalues[2];

        Eigen::Vector3d normal;
        if (lambda_max <= 0.0 || lambda_mid <= 1e-10 * lambda_max) {
            // Collinear (or fully coincident) neighborhood: the plane normal
            // is underdetermined. Flag it and pick any direction orthogonal
            // to the dominant axis.
            result.degenerate_indices.push_back(i);
            const Eigen::Vector3d dominant = lambda_max > 0.0
                                                 ? Eigen::Vector3d(solver.eigenvectors().col(2))
                                                 : Eigen::Vector3d(Eigen::Vector3d::UnitX());
            normal = orthogonal_unit(dominant);
        } else {
            normal = solver.eigenvectors().col(0);
        }
        result.cloud.normals[static_cast<std::size_t>(i)] = canonical_sign(normal.normalized());
    }
    return result;
}

} // namespace pointsp
