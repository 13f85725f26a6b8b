// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef POINTSP_METRICS_HPP
#define POINTSP_METRICS_HPP

#include "pointsp/cloud.hpp"

namespace pointsp {

/// Symmetric Chamfer distance, sum-of-means convention:
/// mean over a of the nearest-neighbor distance into b, plus the same with
/// the roles swapped. Both clouds must be non-empty.
double chamfer_distance(const PointCloud& a, const PointCloud& b);

} // namespace pointsp

#endif // POINTSP_METRICS_HPP
