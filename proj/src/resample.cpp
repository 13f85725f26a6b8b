// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/resample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pointsp/kdtree.hpp"
#include "pointsp/normals.hpp"
#include "pointsp/rng.hpp"

namespace pointsp {

namespace {

constexpr double kDegenerateDirection = 1e-9;

// Seed streams inside one upsampling run. Candidate generation uses one
// stream per (round, source); subset selection uses its own stream per round.
std::uint64_t candidate_stream(std::uint64_t seed, int round, int n, int source) {
    return derive_seed(seed, static_cast<std::uint64_t>(round) * static_cast<std::uint64_t>(n) +
                                 static_cast<std::uint64_t>(source));
}
std::uint64_t selection_stream(std::uint64_t seed, int round) {
    return derive_seed(seed, 0xC0DE000000000000ULL + static_cast<std::uint64_t>(round));
}

InterpolationRecord make_record(const PointCloud& cloud, const NeighborGraph& graph, int query,
                                int slot) {
    const auto nbrs = graph.neighbors_of(query);
    const auto dists = graph.distances_of(query);

    InterpolationRecord rec;
    rec.source_index = query;
    rec.neighbor_index = nbrs[static_cast<std::size_t>(slot)];
    rec.delta_med = median_of({dists.begin(), dists.end()});

    const Eigen::Vector3d& p = cloud.points[static_cast<std::size_t>(query)];
    const Eigen::Vector3d& q = cloud.points[static_cast<std::size_t>(rec.neighbor_index)];
    const Eigen::Vector3d& normal = cloud.normals[static_cast<std::size_t>(query)];

    // Project the offset onto the tangent plane: v = (I - n n^T)(q - p).
    // Invariant under a sign flip of the normal.
    const Eigen::Vector3d offset = q - p;
    const Eigen::Vector3d v = offset - normal * normal.dot(offset);
    const double norm = v.norm();
    if (norm < kDegenerateDirection) {
        throw DegenerateGeometryError("offset to neighbor " +
                                      std::to_string(rec.neighbor_index) +
                                      " is parallel to the normal at point " +
                                      std::to_string(query));
    }
    rec.direction = v / norm;
    rec.new_point = p + rec.delta_med * rec.direction;
    return rec;
}

} // namespace

InterpolationRecord lgp_interpolate_with(const PointCloud& cloud, const NeighborGraph& graph,
                                         int query, int slot) {
    validate_cloud(cloud);
    if (!cloud.has_normals()) throw ParameterError("interpolation requires normals");
    if (graph.size() != cloud.size()) {
        throw ParameterError("neighbor graph was not built on this cloud");
    }
    if (query < 0 || query >= cloud.size()) {
        throw ParameterError("query index " + std::to_string(query) + " out of range");
    }
    if (slot < 0 || slot >= graph.k()) {
        throw ParameterError("neighbor slot " + std::to_string(slot) + " out of range");
    }
    return make_record(cloud, graph, query, slot);
}

std::optional<InterpolationRecord> try_lgp_interpolate(const PointCloud& cloud,
                                                       const NeighborGraph& graph, int query,
                                                       std::uint64_t seed) {
    const int k = graph.k();
    Rng rng(seed);
    for (int attempt = 0; attempt < k; ++attempt) {
        const int slot = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        try {
            return make_record(cloud, graph, query, slot);
        } catch (const DegenerateGeometryError&) {
        }
    }
    // Unlucky draws exhausted; only fail if no neighbor works at all.
    for (int slot = 0; slot < k; ++slot) {
        try {
            return make_record(cloud, graph, query, slot);
        } catch (const DegenerateGeometryError&) {
        }
    }
    return std::nullopt;
}

InterpolationRecord lgp_interpolate(const PointCloud& cloud, const NeighborGraph& graph,
                                    int query, std::uint64_t seed) {
    validate_cloud(cloud);
    if (!cloud.has_normals()) throw ParameterError("interpolation requires normals");
    if (graph.size() != cloud.size()) {
        throw ParameterError("neighbor graph was not built on this cloud");
    }
    if (query < 0 || query >= cloud.size()) {
        throw ParameterError("query index " + std::to_string(query) + " out of range");
    }
    auto rec = try_lgp_interpolate(cloud, graph, query, seed);
    if (!rec) {
        throw DegenerateGeometryError("no interpolation direction at point " +
                                      std::to_string(query) +
                                      ": every neighbor offset is parallel to the normal");
    }
    return *rec;
}

PointCloud upsample(const PointCloud& cloud, int delta_n, const NeighborGraph& graph,
                    std::uint64_t seed) {
    validate_cloud(cloud);
    if (delta_n < 1) throw ParameterError("delta_n must be positive");
    if (graph.size() != cloud.size()) {
        throw ParameterError("neighbor graph was not built on this cloud");
    }

    PointCloud estimated; // storage when normals must be estimated first
    const PointCloud* src = &cloud;
    if (!cloud.has_normals()) {
        estimated = estimate_normals(cloud, graph).cloud;
        src = &estimated;
    }

    PointCloud out = cloud;
    out.points.reserve(cloud.points.size() + static_cast<std::size_t>(delta_n));
    if (cloud.has_normals()) {
        out.normals.reserve(cloud.points.size() + static_cast<std::size_t>(delta_n));
    }

    const int n = cloud.size();
    int needed = delta_n;
    for (int round = 0; needed > 0; ++round) {
        std::vector<InterpolationRecord> candidates;
        candidates.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            auto rec = try_lgp_interpolate(*src, graph, i, candidate_stream(seed, round, n, i));
            if (rec) candidates.push_back(std::move(*rec));
        }
        if (candidates.empty()) {
            throw DegenerateGeometryError("upsampling failed: no point admits an interpolant");
        }

        std::vector<int> chosen;
        if (needed >= static_cast<int>(candidates.size())) {
            chosen.resize(candidates.size());
            for (std::size_t i = 0; i < candidates.size(); ++i) chosen[i] = static_cast<int>(i);
        } else {
            Rng rng(selection_stream(seed, round));
            chosen = rng.sample_without_replacement(static_cast<int>(candidates.size()), needed);
        }
        for (const int c : chosen) {
            const auto& rec = candidates[static_cast<std::size_t>(c)];
            out.points.push_back(rec.new_point);
            if (cloud.has_normals()) {
                out.normals.push_back(cloud.normals[static_cast<std::size_t>(rec.source_index)]);
            }
        }
        needed -= static_cast<int>(chosen.size());
    }
    return out;
}

std::pair<PointCloud, ResamplePlan> lgb_downsample_with(const PointCloud& cloud, int delta_n,
                                                        int center, int k_tilde,
                                                        std::uint64_t seed) {
    validate_cloud(cloud);
    const int n = cloud.size();
    const int remove = -delta_n;
    if (remove < 1) throw ParameterError("delta_n must be negative for downsampling");
    if (remove >= n) {
        throw ParameterError("cannot remove " + std::to_string(remove) + " of " +
                             std::to_string(n) + " points");
    }
    if (center < 0 || center >= n) {
        throw ParameterError("center index " + std::to_string(center) + " out of range");
    }
    if (k_tilde < remove || k_tilde > n) {
        throw ParameterError("k_tilde must lie in [-delta_n, N], got " + std::to_string(k_tilde));
    }

    // Neighborhood of the center, center included: itself plus its
    // (k_tilde - 1) nearest neighbors.
    std::vector<int> hood;
    hood.reserve(static_cast<std::size_t>(k_tilde));
    hood.push_back(center);
    if (k_tilde > 1) {
        std::vector<Neighbor> nearest;
        brute_force_knn(cloud.points, cloud.points[static_cast<std::size_t>(center)],
                        k_tilde - 1, center, nearest);
        for (const auto& nb : nearest) hood.push_back(nb.index);
    }

    Rng rng(seed);
    const std::vector<int> picks =
        rng.sample_without_replacement(static_cast<int>(hood.size()), remove);

    ResamplePlan plan;
    plan.delta_n = delta_n;
    plan.neighborhood_size = k_tilde;
    plan.center_index = center;
    plan.selected.reserve(static_cast<std::size_t>(remove));
    for (const int p : picks) plan.selected.push_back(hood[static_cast<std::size_t>(p)]);
    std::sort(plan.selected.begin(), plan.selected.end());

    PointCloud out;
    out.points.reserve(static_cast<std::size_t>(n - remove));
    if (cloud.has_normals()) out.normals.reserve(static_cast<std::size_t>(n - remove));
    std::size_t next_removed = 0;
    for (int i = 0; i < n; ++i) {
        if (next_removed < plan.selected.size() && plan.selected[next_removed] == i) {
            ++next_removed;
            continue;
        }
        out.points.push_back(cloud.points[static_cast<std::size_t>(i)]);
        if (cloud.has_normals()) out.normals.push_back(cloud.normals[static_cast<std::size_t>(i)]);
    }
    return {std::move(out), std::move(plan)};
}

std::pair<PointCloud, ResamplePlan> lgb_downsample(const PointCloud& cloud, int delta_n,
                                                   std::uint64_t seed) {
    validate_cloud(cloud);
    const int n = cloud.size();
    const int remove = -delta_n;
    if (remove < 1) throw ParameterError("delta_n must be negative for downsampling");
    if (remove >= n) {
        throw ParameterError("cannot remove " + std::to_string(remove) + " of " +
                             std::to_string(n) + " points");
    }
    Rng rng(derive_seed(seed, 0));
    const int center = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const int k_tilde = static_cast<int>(rng.uniform_int(remove, n));
    return lgb_downsample_with(cloud, delta_n, center, k_tilde, derive_seed(seed, 1));
}

PointCloud train_resample(const PointCloud& cloud, double rho, std::uint64_t seed, int k) {
    validate_cloud(cloud);
    const int n = cloud.size();
    if (n < 2) throw ParameterError("training resample needs at least 2 points");
    if (rho < 0.0 || rho >= 1.0) {
        throw ParameterError("rho must lie in [0, 1), got " + std::to_string(rho));
    }

    const int bound = static_cast<int>(rho * n);
    Rng rng(derive_seed(seed, 0));
    const int delta_n = static_cast<int>(rng.uniform_int(-bound, bound));

    if (delta_n > 0) {
        const auto graph = build_neighbor_graph(cloud, std::min(k, n - 1));
        return upsample(cloud, delta_n, graph, derive_seed(seed, 1));
    }
    if (delta_n < 0) {
        return lgb_downsample(cloud, delta_n, derive_seed(seed, 2)).first;
    }
    return cloud;
}

PointCloud inference_resample(const PointCloud& cloud, int target_n, std::uint64_t seed, int k) {
    validate_cloud(cloud);
    if (target_n < 1) throw ParameterError("target size must be positive");
    const int n = cloud.size();
    if (n >= target_n) return cloud; // only upsampling at inference
    if (n < 2) {
        throw DegenerateGeometryError("cannot upsample a single point: no neighbors");
    }
    const auto graph = build_neighbor_graph(cloud, std::min(k, n - 1));
    return upsample(cloud, target_n - n, graph, derive_seed(seed, 1));
}

} // namespace pointsp
