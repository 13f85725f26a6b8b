// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Point cloud container shared by every module.

#ifndef POINTSP_CLOUD_HPP
#define POINTSP_CLOUD_HPP

#include <Eigen/Core>
#include <vector>

#include "pointsp/errors.hpp"

namespace pointsp {

/// Ordered set of 3D points with optional per-point unit normals.
/// Points are addressed by their (stable) position in `points`.
struct PointCloud {
    std::vector<Eigen::Vector3d> points;
    std::vector<Eigen::Vector3d> normals; // empty, or same length as points

    PointCloud() = default;
    explicit PointCloud(std::vector<Eigen::Vector3d> pts) : points(std::move(pts)) {}

    int size() const { return static_cast<int>(points.size()); }
    bool empty() const { return points.empty(); }
    bool has_normals() const { return !normals.empty(); }
};

/// Throws ParameterError unless the cloud satisfies its invariants:
/// non-empty, all coordinates finite, and (when present) unit normals
/// aligned one-to-one with the points.
void validate_cloud(const PointCloud& cloud);

/// Centroid of the points.
Eigen::Vector3d centroid(const PointCloud& cloud);

/// Returns a copy with every coordinate multiplied by `factor`.
PointCloud scaled(const PointCloud& cloud, double factor);

} // namespace pointsp

#endif // POINTSP_CLOUD_HPP
