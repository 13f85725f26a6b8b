// Copyright 2026 The pointsp Authors
// SPDX-License-Identifier: Apache-2.0

#include "pointsp/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_set>

#include "pointsp/metrics.hpp"
#include "pointsp/resample.hpp"
#include "pointsp/rng.hpp"

namespace pointsp {

namespace {

// Stage seeds within one pipeline run.
constexpr std::uint64_t kResampleStage = 1;
constexpr std::uint64_t kSampleStage = 2;

int clamped_k(int k, int n) { return std::min(k, n - 1); }

} // namespace

InferenceResult run_inference_pipeline(const PointCloud& cloud, const ProtocolConfig& cfg) {
    validate_cloud(cloud);
    InferenceResult result;
    result.prepared =
        inference_resample(cloud, cfg.target_n, derive_seed(cfg.seed, kResampleStage), cfg.k);

    const auto graph =
        build_neighbor_graph(result.prepared, clamped_k(cfg.k, result.prepared.size()));
    result.weights = filter_mask(isolation_rates(graph), cfg.omega);
    result.keypoints = ffps(result.prepared, result.weights, cfg.m, cfg.start_rule);
    return result;
}

TrainingResult run_training_pipeline(const PointCloud& cloud, const ProtocolConfig& cfg) {
    validate_cloud(cloud);
    TrainingResult result;
    result.prepared =
        train_resample(cloud, cfg.rho, derive_seed(cfg.seed, kResampleStage), cfg.k);

    const auto graph =
        build_neighbor_graph(result.prepared, clamped_k(cfg.k, result.prepared.size()));
    const auto weights = sampling_weights(isolation_rates(graph));
    result.keypoints =
        sws(result.prepared, weights, cfg.m, derive_seed(cfg.seed, kSampleStage));
    return result;
}

MetricsReport report_metrics(const PointCloud& clean, const PointCloud& processed) {
    MetricsReport report;
    report.chamfer = chamfer_distance(clean, processed);
    report.size_delta = processed.size() - clean.size();
    return report;
}

MetricsReport report_metrics(const PointCloud& clean, const PointCloud& processed,
                             const std::vector<int>& selected,
                             const std::vector<int>& outlier_indices) {
    MetricsReport report = report_metrics(clean, processed);
    const std::unordered_set<int> outliers(outlier_indices.begin(), outlier_indices.end());
    long captured = 0;
    for (const int idx : selected) {
        if (outliers.contains(idx)) ++captured;
    }
    report.outlier_capture = captured;
    return report;
}

std::string to_key_value(const MetricsReport& report) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", report.chamfer);
    std::string out = "chamfer=";
    out += buf;
    out += "\nsize_delta=" + std::to_string(report.size_delta) + "\n";
    if (report.outlier_capture) {
        out += "outlier_capture=" + std::to_string(*report.outlier_capture) + "\n";
    }
    return out;
}

std::string to_csv(const MetricsReport& report) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", report.chamfer);
    std::string header = "chamfer,size_delta";
    std::string row = std::string(buf) + "," + std::to_string(report.size_delta);
    if (report.outlier_capture) {
        header += ",outlier_capture";
        row += "," + std::to_string(*report.outlier_capture);
    }
    return header + "\n" + row + "\n";
}

} // namespace pointsp
