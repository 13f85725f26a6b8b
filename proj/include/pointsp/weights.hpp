// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Point reweighting: isolation rates, categorical sampling weights, and the
// binary filter mask consumed by filtered farthest point sampling.

#ifndef POINTSP_WEIGHTS_HPP
#define POINTSP_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "pointsp/neighbor_graph.hpp"

namespace pointsp {

/// Per-point weights derived from the neighbor graph. Fields fill in stages:
/// isolation_rates -> sampling_weights -> filter_mask. Immutable once built.
struct WeightVector {
    std::vector<double> isolation;        // iota_i in [0,1]; high = isolated
    std::vector<double> sampling_weight;  // nonnegative, sums to 1
    std::vector<std::uint8_t> mask;       // 1 = retained, 0 = filtered out
    double omega = 1.0;                   // quantile threshold behind `mask`

    int size() const { return static_cast<int>(isolation.size()); }
    bool has_sampling_weights() const { return !sampling_weight.empty(); }
    bool has_mask() const { return !mask.empty(); }
    int unmasked_count() const;
};

/// Isolation rate of each point: the fraction of its neighbor distances that
/// reach the global median local radius (inclusive comparison). Scale
/// invariant, since distances and the median radius scale together.
WeightVector isolation_rates(const NeighborGraph& graph);

/// Categorical sampling weights proportional to (1 - isolation), normalized
/// to sum 1. Falls back to uniform when every point is fully isolated.
WeightVector sampling_weights(WeightVector wv);

/// Binary mask retaining points whose isolation does not strictly exceed the
/// omega-quantile (empirical quantile with linear interpolation) of all
/// isolation values, and never fewer than ceil(omega * N) points. omega must
/// lie in (0, 1]. The mask always keeps at least one point.
WeightVector filter_mask(WeightVector wv, double omega);

/// Empirical quantile with linear interpolation between order statistics.
double quantile_linear(std::vector<double> values, double q);

} // namespace pointsp

#endif // POINTSP_WEIGHTS_HPP
