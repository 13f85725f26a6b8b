// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/cloud.hpp"

#include <cmath>
#include <string>

namespace pointsp {

void validate_cloud(const PointCloud& cloud) {
    if (cloud.empty()) throw ParameterError("point cloud is empty");
    for (int i = 0; i < cloud.size(); ++i) {
        if (!cloud.points[static_cast<std::size_t>(i)].allFinite()) {
            throw ParameterError("non-finite coordinate at point " + std::to_string(i));
        }
    }
    if (cloud.has_normals()) {
        if (cloud.normals.size() != cloud.points.size()) {
            throw ParameterError("normals length does not match points length");
        }
        for (int i = 0; i < cloud.size(); ++i) {
            const double norm = cloud.normals[static_cast<std::size_t>(i)].norm();
            if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6) {
                throw ParameterError("normal " + std::to_string(i) + " is not unit length");
            }
        }
    }
}

Eigen::Vector3d centroid(const PointCloud& cloud) {
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    for (const auto& p : cloud.points) sum += p;
    return sum / static_cast<double>(cloud.size());
}

PointCloud scaled(const PointCloud& cloud, double factor) {
    PointCloud out = cloud;
    for (auto& p : out.points) p *= factor;
    return out;
}

} // namespace pointsp
