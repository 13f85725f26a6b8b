// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Synthetic corruption families for robustness fixtures: Scale, Jitter,
// Drop-G, Drop-L, Add-G, Add-L, Rotate.

#ifndef POINTSP_CORRUPTION_HPP
#define POINTSP_CORRUPTION_HPP

#include <cstdint>
#include <string>

#include "pointsp/cloud.hpp"

namespace pointsp {

enum class CorruptionFamily {
    scale,
    jitter,
    drop_global,
    drop_local,
    add_global,
    add_local,
    rotate,
};

struct CorruptionSpec {
    CorruptionFamily family = CorruptionFamily::jitter;
    int severity = 1; // 1..5
    std::uint64_t seed = 0;
};

/// Severity schedule and normalization tolerances. The numeric constants sit
/// here, in one place, so fixtures can be re-tuned without touching the
/// generators.
struct CorruptionConfig {
    double scale_step = 0.1;               // per-axis factor range [1/(1+0.1s), 1+0.1s]
    double jitter_sigma_step = 0.01;       // Gaussian sigma = 0.01 s
    double drop_global_fraction_step = 0.15; // removed fraction = 0.15 s
    double drop_local_patch_fraction = 0.05; // s patches of 0.05 N points each
    double add_fraction_step = 0.1;        // appended fraction = 0.1 s
    double add_local_sigma = 0.05;         // blob spread
    double rotate_degrees_step = 15.0;     // angle range [0, 15 deg * s]

    // A cloud counts as unit-sphere normalized when its centroid is within
    // `center_tol` of the origin and its max radius within `radius_tol` of 1.
    double center_tol = 0.05;
    double radius_tol = 0.05;
};

/// Translate the centroid to the origin and scale the max radius to 1.
/// Single-point clouds are centered only.
PointCloud normalize_unit_sphere(const PointCloud& cloud);

bool is_unit_normalized(const PointCloud& cloud, const CorruptionConfig& config = {});

/// Applies one corruption family at the given severity, deterministically per
/// seed. Inputs not already unit-sphere normalized are normalized first.
/// Drop families remove points (a strict subset survives); add families
/// append points after the originals; rotate is a proper isometry.
PointCloud corrupt(const PointCloud& cloud, const CorruptionSpec& spec,
                   const CorruptionConfig& config = {});

CorruptionFamily corruption_family_from_string(const std::string& name);
std::string to_string(CorruptionFamily family);

} // namespace pointsp

#endif // POINTSP_CORRUPTION_HPP
