// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/corruption.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "pointsp/kdtree.hpp"
#include "pointsp/rng.hpp"

namespace pointsp {

namespace {

double max_radius(const PointCloud& cloud, const Eigen::Vector3d& center) {
    double r = 0.0;
    for (const auto& p : cloud.points) r = std::max(r, (p - center).norm());
    return r;
}

int appended_count(double fraction_step, int severity, int n) {
    return static_cast<int>(std::llround(fraction_step * severity * n));
}

PointCloud apply_scale(const PointCloud& cloud, int severity, const CorruptionConfig& cfg,
                       Rng& rng) {
    const double hi = 1.0 + cfg.scale_step * severity;
    const double lo = 1.0 / hi;
    Eigen::Vector3d factors;
    for (int a = 0; a < 3; ++a) {
        factors[a] = std::exp(rng.uniform(std::log(lo), std::log(hi)));
    }
    PointCloud out;
    out.points.reserve(cloud.points.size());
    for (const auto& p : cloud.points) out.points.push_back(p.cwiseProduct(factors));
    return out;
}

PointCloud apply_jitter(const PointCloud& cloud, int severity, const CorruptionConfig& cfg,
                        Rng& rng) {
    const double sigma = cfg.jitter_sigma_step * severity;
    PointCloud out;
    out.points.reserve(cloud.points.size());
    for (const auto& p : cloud.points) out.points.push_back(p + sigma * rng.gaussian3());
    return out;
}

PointCloud remove_indices(const PointCloud& cloud, std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    PointCloud out;
    out.points.reserve(cloud.points.size() - removed.size());
    const bool keep_normals = cloud.has_normals();
    if (keep_normals) out.normals.reserve(cloud.points.size() - removed.size());
    std::size_t next = 0;
    for (int i = 0; i < cloud.size(); ++i) {
        if (next < removed.size() && removed[next] == i) {
            ++next;
            continue;
        }
        out.points.push_back(cloud.points[static_cast<std::size_t>(i)]);
        if (keep_normals) out.normals.push_back(cloud.normals[static_cast<std::size_t>(i)]);
    }
    return out;
}

PointCloud apply_drop_global(const PointCloud& cloud, int severity, const CorruptionConfig& cfg,
                             Rng& rng) {
    const int n = cloud.size();
    const int remove = static_cast<int>(
        std::llround(cfg.drop_global_fraction_step * severity * n));
    if (remove >= n) {
        throw ParameterError("drop_global at severity " + std::to_string(severity) +
                             " would remove every point");
    }
    if (remove == 0) return cloud;
    return remove_indices(cloud, rng.sample_without_replacement(n, remove));
}

PointCloud apply_drop_local(const PointCloud& cloud, int severity, const CorruptionConfig& cfg,
                            Rng& rng) {
    const int n = cloud.size();
    const int patch = std::max(1, static_cast<int>(cfg.drop_local_patch_fraction * n));
    if (severity * patch >= n) {
        throw ParameterError("drop_local at severity " + std::to_string(severity) +
                             " would remove every point");
    }

    // Remove `severity` patches, each the patch-NN neighborhood (center
    // included) of a random center among the points still present.
    PointCloud current = cloud;
    std::vector<Neighbor> nearest;
    for (int c = 0; c < severity; ++c) {
        const int m = current.size();
        const int center = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
        std::vector<int> removed{center};
        brute_force_knn(current.points, current.points[static_cast<std::size_t>(center)],
                        patch - 1, center, nearest);
        for (const auto& nb : nearest) removed.push_back(nb.index);
        current = remove_indices(current, std::move(removed));
    }
    return current;
}

PointCloud apply_add_global(const PointCloud& cloud, int severity, const CorruptionConfig& cfg,
                            Rng& rng) {
    const int count = appended_count(cfg.add_fraction_step, severity, cloud.size());
    Eigen::Vector3d lo = cloud.points.front();
    Eigen::Vector3d hi = lo;
    for (const auto& p : cloud.points) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    // Bounding cube: the axis-aligned cube of the largest box side.
    const Eigen::Vector3d center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo).maxCoeff();

    PointCloud out;
    out.points = cloud.points;
    out.points.reserve(out.points.size() + static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Eigen::Vector3d p;
        for (int a = 0; a < 3; ++a) p[a] = center[a] + rng.uniform(-half, half);
        out.points.push_back(p);
    }
    return out;
}

PointCloud apply_add_local(const PointCloud& cloud, int severity, const CorruptionConfig& cfg,
                           Rng& rng) {
    const int n = cloud.size();
    const int count = appended_count(cfg.add_fraction_step, severity, n);
    const int blobs = std::min(severity, n);

    std::vector<int> centers = rng.sample_without_replacement(n, blobs);
    PointCloud out;
    out.points = cloud.points;
    out.points.reserve(out.points.size() + static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const auto& c = cloud.points[static_cast<std::size_t>(centers[static_cast<std::size_t>(i % blobs)])];
        out.points.push_back(c + cfg.add_local_sigma * rng.gaussian3());
    }
    return out;
}

PointCloud apply_rotate(const PointCloud& cloud, int severity, const CorruptionConfig& cfg,
                        Rng& rng) {
    const double max_angle = cfg.rotate_degrees_step * severity * std::numbers::pi / 180.0;
    const Eigen::Vector3d axis = rng.unit_vector();
    const double angle = rng.uniform(0.0, max_angle);

    // Rodrigues' formula.
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix3d cross;
    cross << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
    const Eigen::Matrix3d rot =
        c * Eigen::Matrix3d::Identity() + s * cross + (1.0 - c) * axis * axis.transpose();

    PointCloud out;
    out.points.reserve(cloud.points.size());
    for (const auto& p : cloud.points) out.points.push_back(rot * p);
    if (cloud.has_normals()) {
        out.normals.reserve(cloud.normals.size());
        for (const auto& nrm : cloud.normals) out.normals.push_back(rot * nrm);
    }
    return out;
}

} // namespace

PointCloud normalize_unit_sphere(const PointCloud& cloud) {
    validate_cloud(cloud);
    const Eigen::Vector3d c = centroid(cloud);
    const double r = max_radius(cloud, c);
    const double scale = r > 0.0 ? 1.0 / r : 1.0;
    PointCloud out = cloud;
    for (auto& p : out.points) p = (p - c) * scale;
    return out;
}

bool is_unit_normalized(const PointCloud& cloud, const CorruptionConfig& config) {
    const Eigen::Vector3d c = centroid(cloud);
    if (c.norm() > config.center_tol) return false;
    const double r = max_radius(cloud, Eigen::Vector3d::Zero());
    return std::abs(r - 1.0) <= config.radius_tol;
}

PointCloud corrupt(const PointCloud& cloud, const CorruptionSpec& spec,
                   const CorruptionConfig& config) {
    validate_cloud(cloud);
    if (spec.severity < 1 || spec.severity > 5) {
        throw ParameterError("severity must lie in 1..5, got " + std::to_string(spec.severity));
    }

    PointCloud base = cloud;
    if (!is_unit_normalized(cloud, config)) base = normalize_unit_sphere(cloud);

    Rng rng(spec.seed);
    switch (spec.family) {
        case CorruptionFamily::scale: return apply_scale(base, spec.severity, config, rng);
        case CorruptionFamily::jitter: return apply_jitter(base, spec.severity, config, rng);
        case CorruptionFamily::drop_global:
            return apply_drop_global(base, spec.severity, config, rng);
        case CorruptionFamily::drop_local:
            return apply_drop_local(base, spec.severity, config, rng);
        case CorruptionFamily::add_global:
            return apply_add_global(base, spec.severity, config, rng);
        case CorruptionFamily::add_local:
            return apply_add_local(base, spec.severity, config, rng);
        case CorruptionFamily::rotate: return apply_rotate(base, spec.severity, config, rng);
    }
    throw ParameterError("unknown corruption family");
}

CorruptionFamily corruption_family_from_string(const std::string& name) {
    if (name == "scale") return CorruptionFamily::scale;
    if (name == "jitter") return CorruptionFamily::jitter;
    if (name == "drop_global" || name == "drop-g") return CorruptionFamily::drop_global;
    if (name == "drop_local" || name == "drop-l") return CorruptionFamily::drop_local;
    if (name == "add_global" || name == "add-g") return CorruptionFamily::add_global;
    if (name == "add_local" || name == "add-l") return CorruptionFamily::add_local;
    if (name == "rotate") return CorruptionFamily::rotate;
    throw ParameterError("unknown corruption family: " + name);
}

std::string to_string(CorruptionFamily family) {
    switch (family) {
        case CorruptionFamily::scale: return "scale";
        case CorruptionFamily::jitter: return "jitter";
        case CorruptionFamily::drop_global: return "drop_global";
        case CorruptionFamily::drop_local: return "drop_local";
        case CorruptionFamily::add_global: return "add_global";
        case CorruptionFamily::add_local: return "add_local";
        case CorruptionFamily::rotate: return "rotate";
    }
    return "unknown";
}

} // namespace pointsp
