// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Key point selection: farthest point sampling, its mask-filtered variant,
// and seeded stochastic weighted sampling.

#ifndef POINTSP_SAMPLING_HPP
#define POINTSP_SAMPLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pointsp/cloud.hpp"
#include "pointsp/weights.hpp"

namespace pointsp {

enum class SampleMethod { fps, ffps, sws };

enum class StartRule {
    first_unmasked,
    max_centroid_distance_unmasked,
};

struct SampleResult {
    std::vector<int> indices; // distinct, in selection order
    SampleMethod method = SampleMethod::fps;
    std::optional<std::uint64_t> seed; // absent for deterministic methods
};

/// Farthest point sampling from an explicit start index. Each step selects
/// the unselected point maximizing the minimum distance to the selected set;
/// distance ties resolve toward the lower index. O(mN) distance updates.
SampleResult fps(const PointCloud& cloud, int m, int start);

/// FPS restricted to mask-1 points: a filtered point scores zero and is
/// never selected while any unfiltered point remains. Requires m at most the
/// unmasked count. The start point is derived from `rule`.
SampleResult ffps(const PointCloud& cloud, const WeightVector& wv, int m,
                  StartRule rule = StartRule::max_centroid_distance_unmasked);

/// FFPS from an explicit start index (must be unmasked).
SampleResult ffps(const PointCloud& cloud, const WeightVector& wv, int m, int start);

/// m categorical draws without replacement, proportional to the sampling
/// weights with renormalization after each draw. Fully determined by `seed`;
/// zero-weight points are never drawn.
SampleResult sws(const PointCloud& cloud, const WeightVector& wv, int m, std::uint64_t seed);

/// Start index a rule resolves to. `wv` may be null (all points eligible).
int resolve_start(const PointCloud& cloud, const WeightVector* wv, StartRule rule);

StartRule start_rule_from_string(const std::string& name);
std::string to_string(StartRule rule);

} // namespace pointsp

#endif // POINTSP_SAMPLING_HPP
