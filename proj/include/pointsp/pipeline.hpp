// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0
//
// The two end-to-end protocol pipelines and the evaluation report.

#ifndef POINTSP_PIPELINE_HPP
#define POINTSP_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pointsp/cloud.hpp"
#include "pointsp/sampling.hpp"
#include "pointsp/weights.hpp"

namespace pointsp {

struct ProtocolConfig {
    int k = 20;              // neighbor count for weights and interpolation
    double omega = 0.95;     // FFPS quantile threshold
    double rho = 0.25;       // training size-jitter fraction
    int target_n = 1024;     // canonical cloud size at inference
    int m = 128;             // key point count
    std::uint64_t seed = 0;
    StartRule start_rule = StartRule::max_centroid_distance_unmasked;
};

struct InferenceResult {
    PointCloud prepared;   // resampled to the canonical size
    SampleResult keypoints;
    WeightVector weights;
};

struct TrainingResult {
    PointCloud prepared;   // size-jittered
    SampleResult keypoints;
};

/// Inference preparation: conditional upsampling to target_n, isolation
/// rates, the omega filter mask, then FFPS key points.
InferenceResult run_inference_pipeline(const PointCloud& cloud, const ProtocolConfig& cfg);

/// Training augmentation: randomized resampling to N + delta, isolation
/// rates, categorical weights, then stochastic weighted key points. Fully
/// determined by cfg.seed.
TrainingResult run_training_pipeline(const PointCloud& cloud, const ProtocolConfig& cfg);

struct MetricsReport {
    double chamfer = 0.0;
    long size_delta = 0; // processed size minus clean size
    std::optional<long> outlier_capture; // selected indices flagged as outliers
};

MetricsReport report_metrics(const PointCloud& clean, const PointCloud& processed);

/// Variant with an outlier manifest: counts how many of the selected indices
/// appear in `outlier_indices`.
MetricsReport report_metrics(const PointCloud& clean, const PointCloud& processed,
                             const std::vector<int>& selected,
                             const std::vector<int>& outlier_indices);

/// key=value lines, one metric per line.
std::string to_key_value(const MetricsReport& report);

/// Two CSV lines: header and values.
std::string to_csv(const MetricsReport& report);

} // namespace pointsp

#endif // POINTSP_PIPELINE_HPP
