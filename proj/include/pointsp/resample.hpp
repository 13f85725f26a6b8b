// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Full points resampling: tangent-plane interpolation upsampling,
// local-global-balanced downsampling, and the training / inference wrappers
// that adjust cloud size.

#ifndef POINTSP_RESAMPLE_HPP
#define POINTSP_RESAMPLE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pointsp/cloud.hpp"
#include "pointsp/neighbor_graph.hpp"

namespace pointsp {

/// One interpolated point: placed delta_med away from the source, along the
/// tangent-plane projection of the offset to a randomly chosen neighbor.
struct InterpolationRecord {
    int source_index = -1;
    int neighbor_index = -1;      // the chosen neighbor q*
    double delta_med = 0.0;       // median of the source's neighbor distances
    Eigen::Vector3d direction;    // unit, orthogonal to the source normal
    Eigen::Vector3d new_point;
};

/// Record of one resampling action.
struct ResamplePlan {
    int delta_n = 0;
    int neighborhood_size = 0;        // k-tilde (downsampling)
    int center_index = -1;            // downsampling center
    std::vector<int> selected;        // removed indices, ascending
};

/// Tangent-plane interpolation at `query` with the neighbor chosen by `slot`
/// (a position in the query's neighbor list). Deterministic core of
/// lgp_interpolate. Throws DegenerateGeometryError when the offset to that
/// neighbor is parallel to the normal (projection below 1e-9).
InterpolationRecord lgp_interpolate_with(const PointCloud& cloud, const NeighborGraph& graph,
                                         int query, int slot);

/// Seeded interpolation: delta_med = median neighbor distance, q* drawn
/// uniformly from the neighbors. A degenerate draw is retried up to k times,
/// then the neighbors are scanned in order; the error fires only when every
/// neighbor offset is parallel to the normal.
InterpolationRecord lgp_interpolate(const PointCloud& cloud, const NeighborGraph& graph,
                                    int query, std::uint64_t seed);

/// Non-throwing variant used by the upsampler.
std::optional<InterpolationRecord> try_lgp_interpolate(const PointCloud& cloud,
                                                       const NeighborGraph& graph, int query,
                                                       std::uint64_t seed);

/// Appends delta_n interpolated points. Candidates are generated one per
/// source point (normals estimated first when absent) with per-point seed
/// streams, then a uniform without-replacement subset is kept; more rounds
/// run when delta_n exceeds the candidate count. Input points are a
/// bit-exact prefix of the output.
PointCloud upsample(const PointCloud& cloud, int delta_n, const NeighborGraph& graph,
                    std::uint64_t seed);

/// Removes -delta_n points drawn uniformly from the k-tilde nearest
/// neighbors of a random center (the center counts as its own neighbor, so
/// k-tilde = N spans the whole cloud). k-tilde is drawn uniformly from
/// [-delta_n, N]: the local-patch end of the spectrum at -delta_n, global
/// random deletion at N.
std::pair<PointCloud, ResamplePlan> lgb_downsample(const PointCloud& cloud, int delta_n,
                                                   std::uint64_t seed);

/// Downsampling with the center and k-tilde pinned (the removal subset still
/// draws from `seed`).
std::pair<PointCloud, ResamplePlan> lgb_downsample_with(const PointCloud& cloud, int delta_n,
                                                        int center, int k_tilde,
                                                        std::uint64_t seed);

/// Training-time size jitter: delta_n drawn uniformly from
/// [-floor(rho N), +floor(rho N)], then upsample / downsample / identity.
/// `k` is the neighborhood size for interpolation, clamped to N-1.
PointCloud train_resample(const PointCloud& cloud, double rho, std::uint64_t seed, int k = 20);

/// Inference-time restoration: upsample to `target_n` when the cloud is
/// smaller, otherwise return it unchanged. Original points always survive.
PointCloud inference_resample(const PointCloud& cloud, int target_n, std::uint64_t seed,
                              int k = 20);

} // namespace pointsp

#endif // POINTSP_RESAMPLE_HPP
